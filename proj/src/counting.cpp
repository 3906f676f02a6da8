#include "cdgraph/counting.hpp"

#include <stdexcept>

namespace cdgraph {

GraphOrder::GraphOrder(BigInt n) : n_(std::move(n)) {
  if (n_ < 2)
    throw std::invalid_argument("graph order must be at least 2, got " +
                                n_.str());
}

GraphOrder GraphOrder::parse(std::string_view text) {
  return GraphOrder(parse_bigint(text));
}

BigInt raw_pair_count(const GraphOrder& order) { return order.value() / 2; }

unsigned c_of_n(const GraphOrder& order) {
  const BigInt& n = order.value();
  unsigned alpha = 1;
  BigInt power = 2;  // 2^alpha
  while (true) {
    // Threshold for alpha + 1 is 2^(alpha+1) + (alpha+1) - 1.
    const BigInt next_power = power << 1;
    if (n < next_power + alpha) return alpha;
    power = next_power;
    ++alpha;
  }
}

unsigned brute_force_c(const GraphOrder& order, std::uint64_t bound) {
  const BigInt& n_big = order.value();
  if (n_big > bound)
    throw std::invalid_argument("brute_force_c: n exceeds the bound " +
                                std::to_string(bound));
  const auto n = n_big.convert_to<std::uint64_t>();
  unsigned count = 0;
  for (std::uint64_t k = 1; k <= n / 2; ++k) {
    if (pair_satisfies_inequality(k, n - k)) ++count;
  }
  return count;
}

std::vector<ComponentPair> valid_pairs(const GraphOrder& order) {
  const unsigned c = c_of_n(order);
  std::vector<ComponentPair> pairs;
  pairs.reserve(c);
  for (unsigned k = 1; k <= c; ++k)
    pairs.emplace_back(BigInt(k), order.value() - k);
  return pairs;
}

OrderRange order_range_for_count(unsigned alpha) {
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  const BigInt power = BigInt(1) << alpha;
  return {alpha, power + alpha - 1, (power << 1) + alpha - 1};
}

}  // namespace cdgraph
