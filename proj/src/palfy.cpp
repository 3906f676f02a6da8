#include "cdgraph/palfy.hpp"

namespace cdgraph {

ComponentPair::ComponentPair(BigInt x, BigInt y) {
  if (x < 1 || y < 1)
    throw std::invalid_argument("component sizes must be positive");
  if (x <= y) {
    a = std::move(x);
    b = std::move(y);
  } else {
    a = std::move(y);
    b = std::move(x);
  }
}

bool pair_satisfies_inequality(const BigInt& x, const BigInt& y) {
  if (x < 1 || y < 1)
    throw std::invalid_argument("component sizes must be positive");
  const BigInt& a = std::min(x, y);
  const BigInt m = std::max(x, y) + 1;
  return a <= boost::multiprecision::msb(m);
}

PalfyConditionResult satisfies_palfy_condition(const PrimeGraph& g) {
  const std::vector<PrimeGraph::Vertex> vs(g.vertices().begin(),
                                           g.vertices().end());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) continue;
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        if (!g.adjacent(vs[i], vs[k]) && !g.adjacent(vs[j], vs[k]))
          return {false, {vs[i], vs[j], vs[k]}};
      }
    }
  }
  return {};
}

Classification classify(const PrimeGraph& g) {
  const auto components = connected_components(g);

  Classification result;
  if (components.empty()) {
    result.kind = Classification::Kind::empty;
    return result;
  }
  if (components.size() == 1) {
    result.kind = Classification::Kind::connected;
    return result;
  }
  if (components.size() >= 3) {
    result.kind = Classification::Kind::palfy_violation;
    result.reason = ViolationReason::three_or_more_components;
    for (const auto& component : components)
      result.witness.push_back(component.front());
    return result;
  }

  for (const auto& component : components) {
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (std::size_t j = i + 1; j < component.size(); ++j) {
        if (!g.adjacent(component[i], component[j])) {
          result.kind = Classification::Kind::palfy_violation;
          result.reason = ViolationReason::component_not_complete;
          result.witness = {component[i], component[j]};
          return result;
        }
      }
    }
  }

  result.kind = Classification::Kind::two_complete_components;
  result.pair.emplace(BigInt(components[0].size()), BigInt(components[1].size()));
  result.inequality_holds = pair_satisfies_inequality(result.pair->a, result.pair->b);
  return result;
}

std::string_view to_string(Classification::Kind kind) {
  switch (kind) {
    case Classification::Kind::empty: return "empty";
    case Classification::Kind::connected: return "connected";
    case Classification::Kind::two_complete_components:
      return "two_complete_components";
    case Classification::Kind::palfy_violation: return "palfy_violation";
  }
  throw std::logic_error("unreachable classification kind");
}

std::string_view to_string(ViolationReason reason) {
  switch (reason) {
    case ViolationReason::three_or_more_components:
      return "three_or_more_components";
    case ViolationReason::component_not_complete:
      return "component_not_complete";
    case ViolationReason::independent_triple: return "independent_triple";
  }
  throw std::logic_error("unreachable violation reason");
}

}  // namespace cdgraph
