// Acceptance suite: end-to-end checks for the counting functions, the
// structure checks and the CLI table output, each printed as one pass/fail
// line. Returns nonzero if any criterion fails.

#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cdgraph/cli.hpp"
#include "cdgraph/counting.hpp"
#include "cdgraph/graph.hpp"
#include "cdgraph/palfy.hpp"
#include "cdgraph/tables.hpp"
#include "test_util.hpp"

using namespace cdgraph;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

BigInt pow10(unsigned exponent) {
  BigInt n = 1;
  for (unsigned i = 0; i < exponent; ++i) n *= 10;
  return n;
}

// ---- criteria ------------------------------------------------------------

void table1_reproduction() {
  const std::vector<std::pair<BigInt, unsigned>> expected = {
      {10, 3},         {100, 6},        {1000, 9},       {10'000, 13},
      {100'000, 16},   {1'000'000, 19}, {pow10(9), 29},  {pow10(10), 33},
      {pow10(15), 49}, {pow10(20), 66}, {pow10(25), 83}, {pow10(30), 99}};
  const auto rows = table1(default_table1_orders());
  require(rows.size() == expected.size(), "expected 12 rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].n == expected[i].first && rows[i].c == expected[i].second,
            "row " + std::to_string(i) + ": c(" + rows[i].n.str() + ") = " +
                std::to_string(rows[i].c) + ", expected " +
                std::to_string(expected[i].second));
  }
}

void table2_reproduction() {
  const std::vector<Table2Row> expected = {
      {1, 2, 4},      {2, 5, 9},       {3, 10, 18},    {4, 19, 35},
      {5, 36, 68},    {6, 69, 133},    {7, 134, 262},  {8, 263, 519},
      {9, 520, 1032}, {10, 1033, 2057}};
  const auto rows = table2(10);
  require(rows.size() == expected.size(), "expected 10 rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i] == expected[i],
            "alpha " + std::to_string(expected[i].alpha) + ": got [" +
                rows[i].min_n.str() + ", " + rows[i].max_n.str() + "]");
  }
}

void oracle_equivalence() {
  for (std::uint64_t n = 2; n <= 100'000; ++n) {
    const GraphOrder order{BigInt(n)};
    const unsigned fast = c_of_n(order);
    const unsigned slow = brute_force_c(order);
    require(fast == slow, "disagreement at n = " + std::to_string(n) + ": " +
                              std::to_string(fast) + " vs " +
                              std::to_string(slow));
  }
}

void theorem_verification() {
  for (unsigned alpha = 1; alpha <= 14; ++alpha) {
    const OrderRange range = order_range_for_count(alpha);
    BigInt members = 0;
    for (BigInt n = range.min_n; n <= range.max_n; ++n) {
      require(c_of_n(GraphOrder(n)) == alpha,
              "c(" + n.str() + ") != " + std::to_string(alpha));
      ++members;
    }
    require(members == (BigInt(1) << alpha) + 1,
            "member count mismatch at alpha " + std::to_string(alpha));
  }
  for (unsigned alpha = 15; alpha <= 60; ++alpha) {
    const OrderRange range = order_range_for_count(alpha);
    const auto c_at = [](const BigInt& n) { return c_of_n(GraphOrder(n)); };
    require(c_at(range.min_n) == alpha, "c(min_n) mismatch");
    require(c_at(range.min_n - 1) == alpha - 1, "c(min_n - 1) mismatch");
    require(c_at(range.max_n) == alpha, "c(max_n) mismatch");
    require(c_at(range.max_n + 1) == alpha + 1, "c(max_n + 1) mismatch");
  }
}

void palfy_checker_on_random_graphs() {
  std::mt19937 rng(101);
  std::uniform_int_distribution<std::size_t> order_dist(0, 9);
  int survivors = 0;
  for (int iter = 0; iter < 1'000; ++iter) {
    const PrimeGraph g = testutil::random_graph(rng, order_dist(rng));
    const auto result = satisfies_palfy_condition(g);
    require(result.satisfied == testutil::triple_scan_satisfies(g),
            "condition disagrees with the exhaustive scan at iteration " +
                std::to_string(iter));
    if (result.satisfied && connected_components(g).size() >= 2) {
      ++survivors;
      require(classify(g).kind == Classification::Kind::two_complete_components,
              "survivor not classified as two complete components");
    }
  }
  require(survivors > 0, "no disconnected survivors sampled");
}

void inequality_boundary() {
  for (unsigned a = 2; a <= 20; ++a) {
    const BigInt boundary = (BigInt(1) << a) - 1;
    require(pair_satisfies_inequality(BigInt(a), boundary),
            "(a, 2^a - 1) must satisfy the inequality at a = " +
                std::to_string(a));
    require(!pair_satisfies_inequality(BigInt(a), boundary - 1),
            "(a, 2^a - 2) must fail the inequality at a = " +
                std::to_string(a));
  }
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<std::uint64_t> dist(
      1, std::numeric_limits<std::uint64_t>::max());
  for (int iter = 0; iter < 10'000; ++iter) {
    const BigInt x = dist(rng);
    const BigInt y = dist(rng);
    require(pair_satisfies_inequality(x, y) == pair_satisfies_inequality(y, x),
            "asymmetric at iteration " + std::to_string(iter));
  }
}

void raw_count_check() {
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    std::uint64_t enumerated = 0;
    for (std::uint64_t a = 1; a < n; ++a) {
      if (a <= n - a) ++enumerated;
    }
    require(raw_pair_count(GraphOrder(BigInt(n))) == enumerated,
            "partition count mismatch at n = " + std::to_string(n));
  }
}

void large_input_smoke() {
  const BigInt googol = pow10(100);
  require(c_of_n(GraphOrder(googol)) == 332, "c(10^100) != 332");
  require((BigInt(1) << 332) + 331 <= googol, "lower threshold violated");
  require(googol < (BigInt(1) << 333) + 332, "upper threshold violated");
}

void golden_cli_output() {
  const std::filesystem::path golden = CDGRAPH_GOLDEN_DIR;
  const struct {
    std::vector<std::string> args;
    const char* fixture;
  } cases[] = {
      {{"table1", "--format", "json"}, "table1.json"},
      {{"table1", "--format", "csv"}, "table1.csv"},
      {{"table1", "--format", "markdown"}, "table1.md"},
      {{"table2", "--format", "json"}, "table2.json"},
      {{"table2", "--format", "csv"}, "table2.csv"},
      {{"table2", "--format", "markdown"}, "table2.md"},
  };
  for (const auto& test : cases) {
    std::ifstream file(golden / test.fixture, std::ios::binary);
    require(bool(file), std::string("missing fixture ") + test.fixture);
    std::ostringstream expected;
    expected << file.rdbuf();

    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    const int code = cdgraph::cli::run(test.args, in, out, err);
    require(code == 0 && err.str().empty(),
            std::string("CLI failure for ") + test.fixture);
    require(out.str() == expected.str(),
            std::string("output differs from ") + test.fixture);
  }
}

// ---- harness ---------------------------------------------------------------

struct Criterion {
  std::string name;
  std::function<void()> body;
  double budget_ms = 0;  // 0 = untimed
};

int run_all(const std::vector<Criterion>& criteria) {
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& criterion = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criterion.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
    if (error.empty() && criterion.budget_ms > 0 &&
        elapsed_ms > criterion.budget_ms) {
      error = "exceeded time budget";
    }

    std::ostringstream line;
    line << (error.empty() ? "[PASS] " : "[FAIL] ") << (i + 1) << ". "
         << criterion.name << " (" << std::fixed << std::setprecision(1)
         << elapsed_ms << " ms";
    if (criterion.budget_ms > 0)
      line << ", budget " << static_cast<long>(criterion.budget_ms) << " ms";
    line << ")";
    if (!error.empty()) line << ": " << error;
    std::cout << line.str() << std::endl;
    if (!error.empty()) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main() {
  return run_all({
      {"table1 reproduction: c(n) exact for the 12 reference orders",
       table1_reproduction, 1000},
      {"table2 reproduction: order ranges exact for alpha = 1..10",
       table2_reproduction},
      {"oracle equivalence: c_of_n == brute_force_c on [2, 10^5]",
       oracle_equivalence, 60'000},
      {"theorem verification: range scan (alpha <= 14) and endpoints "
       "(alpha <= 60)",
       theorem_verification},
      {"palfy condition vs exhaustive scan on 1000 random graphs",
       palfy_checker_on_random_graphs},
      {"inequality boundary (a = 2..20) and symmetry on 10^4 pairs",
       inequality_boundary},
      {"raw pair count equals partition enumeration on [2, 10^4]",
       raw_count_check},
      {"large-input smoke: c(10^100) = 332 with exact threshold check",
       large_input_smoke, 10},
      {"golden CLI output: table1/table2 in json, csv and markdown",
       golden_cli_output},
  });
}
