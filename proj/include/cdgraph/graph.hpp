#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdgraph {

// Finite set of character degrees. Non-empty, every element >= 1,
// duplicates collapsed.
class DegreeSet {
 public:
  explicit DegreeSet(std::set<std::uint64_t> degrees);

  // Whitespace- or comma-separated decimal integers. Values must fit in
  // 64 bits (the factorization limit); anything else is rejected.
  static DegreeSet parse(std::string_view text);

  const std::set<std::uint64_t>& values() const { return degrees_; }

 private:
  std::set<std::uint64_t> degrees_;
};

// Undirected loop-free graph whose vertices are distinct primes.
class PrimeGraph {
 public:
  using Vertex = std::uint64_t;
  using Edge = std::pair<Vertex, Vertex>;  // normalized first < second

  PrimeGraph() = default;

  // Both mutators validate primality; add_edge also inserts the endpoints
  // and rejects self-loops.
  void add_vertex(Vertex p);
  void add_edge(Vertex p, Vertex q);

  bool has_vertex(Vertex p) const { return vertices_.contains(p); }
  bool adjacent(Vertex p, Vertex q) const;
  std::size_t order() const { return vertices_.size(); }

  const std::set<Vertex>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }

  bool operator==(const PrimeGraph&) const = default;

 private:
  std::set<Vertex> vertices_;
  std::set<Edge> edges_;
};

// Disjoint sorted vertex lists covering the whole graph, ordered by
// descending size, ties broken by smallest contained prime.
using ComponentDecomposition = std::vector<std::vector<PrimeGraph::Vertex>>;

// Vertices are the primes dividing some degree; p != q are adjacent iff
// p*q divides some degree. The degree 1 contributes nothing.
PrimeGraph build_graph(const DegreeSet& degrees);

// Edge-list format: one edge per line "p q"; isolated vertices are
// declared on lines "v p". Labels must be prime. Blank lines are skipped.
PrimeGraph parse_edge_list(std::string_view text);

ComponentDecomposition connected_components(const PrimeGraph& g);

// Same vertices, complemented adjacency.
PrimeGraph complement(const PrimeGraph& g);

// True iff every pair in s is an edge of g; vacuously true for |s| <= 1.
// Throws if s contains a vertex not in g.
bool is_clique(const PrimeGraph& g, const std::set<PrimeGraph::Vertex>& s);

// Graphviz source for the graph (undirected, vertices labeled by primes).
std::string to_dot(const PrimeGraph& g);

}  // namespace cdgraph
