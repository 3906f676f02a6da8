#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace cdgraph {

using BigInt = boost::multiprecision::cpp_int;

// Parses a non-negative decimal integer of unbounded length. Underscores
// and commas are accepted as digit separators and stripped before
// conversion; surrounding whitespace is ignored. Throws std::invalid_argument
// on anything else.
BigInt parse_bigint(std::string_view text);

// Exact decimal rendering; optionally groups digits in threes ("1,033").
std::string to_decimal(const BigInt& value, bool thousands_separators = false);

}  // namespace cdgraph
