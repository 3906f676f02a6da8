#include "cdgraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cdgraph/primes.hpp"

namespace cdgraph {

namespace {

std::uint64_t parse_u64_token(std::string_view token, std::string_view what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw std::invalid_argument(std::string(what) + " '" + std::string(token) +
                                "' exceeds the 64-bit limit");
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw std::invalid_argument("non-numeric " + std::string(what) + " '" +
                                std::string(token) + "'");
  return value;
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream stream(normalized);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(std::move(token));
  return tokens;
}

}  // namespace

DegreeSet::DegreeSet(std::set<std::uint64_t> degrees)
    : degrees_(std::move(degrees)) {
  if (degrees_.empty())
    throw std::invalid_argument("degree set must be non-empty");
  if (*degrees_.begin() < 1)
    throw std::invalid_argument("character degrees must be >= 1");
}

DegreeSet DegreeSet::parse(std::string_view text) {
  const auto tokens = split_tokens(text);
  if (tokens.empty()) throw std::invalid_argument("empty degree list");

  std::set<std::uint64_t> degrees;
  for (const auto& token : tokens) {
    const std::uint64_t value = parse_u64_token(token, "degree");
    if (value < 1)
      throw std::invalid_argument("character degrees must be >= 1, got '" +
                                  token + "'");
    degrees.insert(value);
  }
  return DegreeSet(std::move(degrees));
}

void PrimeGraph::add_vertex(Vertex p) {
  if (!is_prime(p))
    throw std::invalid_argument("vertex label " + std::to_string(p) +
                                " is not prime");
  vertices_.insert(p);
}

void PrimeGraph::add_edge(Vertex p, Vertex q) {
  if (p == q)
    throw std::invalid_argument("self-loop on vertex " + std::to_string(p));
  add_vertex(p);
  add_vertex(q);
  edges_.insert(std::minmax(p, q));
}

bool PrimeGraph::adjacent(Vertex p, Vertex q) const {
  if (p == q) return false;
  return edges_.contains(std::minmax(p, q));
}

PrimeGraph build_graph(const DegreeSet& degrees) {
  PrimeGraph g;
  for (const std::uint64_t degree : degrees.values()) {
    const auto primes = prime_factors(degree);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      g.add_vertex(primes[i]);
      for (std::size_t j = i + 1; j < primes.size(); ++j)
        g.add_edge(primes[i], primes[j]);
    }
  }
  return g;
}

PrimeGraph parse_edge_list(std::string_view text) {
  PrimeGraph g;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    const auto context = [&](const std::string& message) {
      return std::invalid_argument("line " + std::to_string(line_no) + ": " +
                                   message);
    };
    try {
      if (tokens[0] == "v") {
        if (tokens.size() != 2)
          throw context("isolated vertex lines read 'v p'");
        g.add_vertex(parse_u64_token(tokens[1], "vertex label"));
      } else {
        if (tokens.size() != 2) throw context("edge lines read 'p q'");
        g.add_edge(parse_u64_token(tokens[0], "vertex label"),
                   parse_u64_token(tokens[1], "vertex label"));
      }
    } catch (const std::invalid_argument& e) {
      const std::string_view what = e.what();
      if (what.starts_with("line ")) throw;
      throw context(e.what());
    }
  }
  return g;
}

ComponentDecomposition connected_components(const PrimeGraph& g) {
  std::map<PrimeGraph::Vertex, std::vector<PrimeGraph::Vertex>> adjacency;
  for (const auto& [p, q] : g.edges()) {
    adjacency[p].push_back(q);
    adjacency[q].push_back(p);
  }

  ComponentDecomposition components;
  std::set<PrimeGraph::Vertex> seen;
  for (const auto start : g.vertices()) {
    if (seen.contains(start)) continue;
    std::vector<PrimeGraph::Vertex> component;
    std::vector<PrimeGraph::Vertex> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (const auto w : adjacency[v]) {
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }

  std::stable_sort(components.begin(), components.end(),
                   [](const auto& lhs, const auto& rhs) {
                     if (lhs.size() != rhs.size())
                       return lhs.size() > rhs.size();
                     return lhs.front() < rhs.front();
                   });
  return components;
}

PrimeGraph complement(const PrimeGraph& g) {
  PrimeGraph result;
  const std::vector<PrimeGraph::Vertex> vertices(g.vertices().begin(),
                                                 g.vertices().end());
  for (const auto v : vertices) result.add_vertex(v);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.adjacent(vertices[i], vertices[j]))
        result.add_edge(vertices[i], vertices[j]);
    }
  }
  return result;
}

bool is_clique(const PrimeGraph& g, const std::set<PrimeGraph::Vertex>& s) {
  for (const auto v : s) {
    if (!g.has_vertex(v))
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is not in the graph");
  }
  for (auto it = s.begin(); it != s.end(); ++it) {
    for (auto jt = std::next(it); jt != s.end(); ++jt) {
      if (!g.adjacent(*it, *jt)) return false;
    }
  }
  return true;
}

std::string to_dot(const PrimeGraph& g) {
  std::ostringstream out;
  out << "graph delta {\n";
  for (const auto v : g.vertices()) out << "  " << v << ";\n";
  for (const auto& [p, q] : g.edges()) out << "  " << p << " -- " << q << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cdgraph
