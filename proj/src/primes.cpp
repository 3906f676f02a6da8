#include "cdgraph/primes.hpp"

#include <bit>
#include <stdexcept>

namespace cdgraph {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// This witness set decides primality for all n < 2^64.
constexpr std::uint64_t kWitnesses[] = {2,  3,  5,  7,  11, 13,
                                        17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  const int r = std::countr_zero(n - 1);
  const std::uint64_t d = (n - 1) >> r;
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t value) {
  if (value == 0)
    throw std::invalid_argument("prime_factors: value must be positive");

  std::vector<std::uint64_t> factors;
  std::uint64_t v = value;
  const auto strip = [&](std::uint64_t p) {
    if (v % p != 0) return;
    factors.push_back(p);
    while (v % p == 0) v /= p;
  };
  strip(2);
  for (std::uint64_t p = 3; p <= v / p; p += 2) strip(p);
  if (v > 1) factors.push_back(v);
  return factors;
}

}  // namespace cdgraph
