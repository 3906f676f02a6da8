#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdgraph::cli {

// Dispatches one command line (without the program name). Results go to
// `out`, diagnostics to `err`; `in` backs the "-" input source.
// Exit codes: 0 success, 1 invalid input, 2 internal failure.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace cdgraph::cli
