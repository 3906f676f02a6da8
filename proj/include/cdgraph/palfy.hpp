#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cdgraph/bigint.hpp"
#include "cdgraph/graph.hpp"

namespace cdgraph {

// Unordered pair of connected-component sizes, normalized a <= b.
struct ComponentPair {
  BigInt a;
  BigInt b;

  // Normalizes the order; throws if either size is < 1.
  ComponentPair(BigInt x, BigInt y);

  bool operator==(const ComponentPair&) const = default;
};

// Whether b >= 2^a - 1 for a = min(x, y), b = max(x, y). Exact for any
// magnitude: b >= 2^a - 1  <=>  b + 1 >= 2^a  <=>  a <= floor(log2(b + 1)),
// so 2^a is never materialized. Throws if either argument is < 1.
bool pair_satisfies_inequality(const BigInt& x, const BigInt& y);

// Machine-width overload, used by the linear brute-force scans where the
// call count makes big-integer temporaries too costly.
inline bool pair_satisfies_inequality(std::uint64_t x, std::uint64_t y) {
  if (x == 0 || y == 0)
    throw std::invalid_argument("component sizes must be positive");
  const auto [a, b] = std::minmax(x, y);
  if (a >= 65) return false;  // 2^a - 1 exceeds any 64-bit b
  if (a == 64) return b == std::numeric_limits<std::uint64_t>::max();
  return b >= (std::uint64_t{1} << a) - 1;
}

struct PalfyConditionResult {
  bool satisfied = true;
  // A pairwise non-adjacent triple, ascending, when the condition fails.
  std::vector<PrimeGraph::Vertex> witness;
};

// Palfy's condition: among any three vertices, at least two are adjacent
// (equivalently, the complement graph is triangle-free). Graphs with
// fewer than three vertices satisfy it vacuously.
PalfyConditionResult satisfies_palfy_condition(const PrimeGraph& g);

enum class ViolationReason {
  three_or_more_components,
  component_not_complete,
  independent_triple,
};

// Structure of a graph under the two-complete-components classification.
struct Classification {
  enum class Kind { empty, connected, two_complete_components, palfy_violation };

  Kind kind = Kind::empty;

  // Present only for two_complete_components.
  std::optional<ComponentPair> pair;
  bool inequality_holds = false;

  // Present only for palfy_violation: the reason plus a concrete vertex
  // set demonstrating the failure.
  std::optional<ViolationReason> reason;
  std::vector<PrimeGraph::Vertex> witness;
};

// Empty for the empty graph; Connected for one component; for exactly two
// components that are both cliques, TwoCompleteComponents with the size
// pair and its inequality flag; PalfyViolation otherwise.
Classification classify(const PrimeGraph& g);

std::string_view to_string(Classification::Kind kind);
std::string_view to_string(ViolationReason reason);

}  // namespace cdgraph
