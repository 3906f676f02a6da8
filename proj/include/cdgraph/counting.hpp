#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cdgraph/bigint.hpp"
#include "cdgraph/palfy.hpp"

namespace cdgraph {

// Order of a graph under consideration. Always >= 2: a disconnected graph
// needs at least two vertices.
class GraphOrder {
 public:
  explicit GraphOrder(BigInt n);

  // Decimal string of unbounded length; underscore and comma digit
  // separators are stripped.
  static GraphOrder parse(std::string_view text);

  const BigInt& value() const { return n_; }

 private:
  BigInt n_;
};

// Number of unordered partitions of n into two positive parts: floor(n/2).
BigInt raw_pair_count(const GraphOrder& order);

// c(n): the number of component-size pairs of a graph of order n that
// satisfy b >= 2^a - 1. Substituting b = n - a turns the inequality into
// n >= 2^a + a - 1, whose right side increases strictly in a, so
// c(n) = max{alpha >= 1 : n >= 2^alpha + alpha - 1}. Computed by an
// incremental loop over alpha; always >= 1 since the threshold at
// alpha = 1 is 2.
unsigned c_of_n(const GraphOrder& order);

// Independent oracle for c_of_n: scans every k in 1..floor(n/2) and counts
// those with pair_satisfies_inequality(k, n - k). Linear in n, so gated by
// a configurable bound (default 10^6).
unsigned brute_force_c(const GraphOrder& order,
                       std::uint64_t bound = 1'000'000);

// The pairs (k, n - k) for k = 1..c(n), each normalized a <= b; all of
// them satisfy the inequality and no further pair does.
std::vector<ComponentPair> valid_pairs(const GraphOrder& order);

// Inclusive interval of the orders n with c(n) == alpha.
struct OrderRange {
  unsigned alpha = 0;
  BigInt min_n;  // 2^alpha + alpha - 1
  BigInt max_n;  // 2^(alpha+1) + alpha - 1

  BigInt cardinality() const { return max_n - min_n + 1; }  // 2^alpha + 1

  bool operator==(const OrderRange&) const = default;
};

OrderRange order_range_for_count(unsigned alpha);

}  // namespace cdgraph
