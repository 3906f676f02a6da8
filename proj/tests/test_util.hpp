#pragma once

// Shared helpers for the test suites: deliberately naive oracles and random
// graph generation, kept independent of the library code they check.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "cdgraph/graph.hpp"

namespace testutil {

inline bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline const std::vector<std::uint64_t> kPrimes = {2,  3,  5,  7,  11,
                                                   13, 17, 19, 23, 29};

// Labeled random graph on the first `order` primes, each edge present
// independently with probability 1/2.
inline cdgraph::PrimeGraph random_graph(std::mt19937& rng, std::size_t order) {
  cdgraph::PrimeGraph g;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < order; ++i) g.add_vertex(kPrimes[i]);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = i + 1; j < order; ++j) {
      if (coin(rng)) g.add_edge(kPrimes[i], kPrimes[j]);
    }
  }
  return g;
}

// Adjacency lookup built directly from the stored edge set.
inline std::map<std::uint64_t, std::vector<std::uint64_t>> adjacency_of(
    const cdgraph::PrimeGraph& g) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> adj;
  for (const auto v : g.vertices()) adj[v];
  for (const auto& [p, q] : g.edges()) {
    adj[p].push_back(q);
    adj[q].push_back(p);
  }
  return adj;
}

// Exhaustive scan for a pairwise non-adjacent triple, written as plainly
// as possible.
inline bool triple_scan_satisfies(const cdgraph::PrimeGraph& g) {
  const std::vector<std::uint64_t> vs(g.vertices().begin(),
                                      g.vertices().end());
  const auto non_adjacent = [&](std::uint64_t a, std::uint64_t b) {
    return !g.edges().contains(std::minmax(a, b));
  };
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        if (non_adjacent(vs[i], vs[j]) && non_adjacent(vs[i], vs[k]) &&
            non_adjacent(vs[j], vs[k]))
          return false;
      }
    }
  }
  return true;
}

}  // namespace testutil
