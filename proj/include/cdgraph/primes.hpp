#pragma once

#include <cstdint>
#include <vector>

namespace cdgraph {

// Deterministic Miller-Rabin test, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Distinct prime factors of a positive integer, ascending, by trial
// division up to the integer square root. prime_factors(1) is empty.
// Throws std::invalid_argument for 0.
std::vector<std::uint64_t> prime_factors(std::uint64_t value);

}  // namespace cdgraph
