#include "cdgraph/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdgraph/counting.hpp"
#include "cdgraph/graph.hpp"
#include "cdgraph/palfy.hpp"
#include "cdgraph/tables.hpp"

namespace cdgraph::cli {

namespace {

using nlohmann::ordered_json;

// Keeps pathological arguments from exhausting memory; 2^alpha still has a
// million bits at the cap.
constexpr std::uint64_t kMaxRangeAlpha = 1'000'000;
constexpr std::uint64_t kMaxTableAlpha = 10'000;

enum class OutputFormat { plain, json, csv, markdown };

OutputFormat parse_output_format(const std::string& token) {
  if (token == "plain") return OutputFormat::plain;
  if (token == "json") return OutputFormat::json;
  if (token == "csv") return OutputFormat::csv;
  if (token == "markdown") return OutputFormat::markdown;
  throw std::invalid_argument("unknown format '" + token +
                              "' (expected plain, json, csv or markdown)");
}

TableFormat to_table_format(OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return TableFormat::json;
    case OutputFormat::csv: return TableFormat::csv;
    case OutputFormat::markdown: return TableFormat::markdown;
    case OutputFormat::plain: break;
  }
  throw std::logic_error("plain is not a table_gen format");
}

// Input sources: "-" reads the standard input, an existing file path reads
// that file, anything else is taken as inline text.
std::string read_source(const std::string& source, std::istream& in) {
  if (source == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream file(source);
    if (!file) throw std::invalid_argument("cannot open file '" + source + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  }
  return source;
}

PrimeGraph load_graph(const std::string& degrees_src,
                      const std::string& edges_src, std::istream& in) {
  const bool have_degrees = !degrees_src.empty();
  const bool have_edges = !edges_src.empty();
  if (have_degrees == have_edges)
    throw std::invalid_argument(
        "exactly one of --degrees or --edges is required");
  if (have_degrees)
    return build_graph(DegreeSet::parse(read_source(degrees_src, in)));
  return parse_edge_list(read_source(edges_src, in));
}

std::uint64_t parse_alpha(const std::string& text, std::uint64_t cap) {
  const BigInt value = parse_bigint(text);
  if (value < 1) throw std::invalid_argument("alpha must be at least 1");
  if (value > cap)
    throw std::invalid_argument("alpha too large (limit " +
                                std::to_string(cap) + ")");
  return value.convert_to<std::uint64_t>();
}

std::string join(const std::vector<PrimeGraph::Vertex>& vs) {
  std::string out;
  for (const auto v : vs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

ordered_json vertex_strings(const std::vector<PrimeGraph::Vertex>& vs) {
  ordered_json arr = ordered_json::array();
  for (const auto v : vs) arr.push_back(std::to_string(v));
  return arr;
}

void write_plain_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows,
                       std::ostream& out) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());

  const auto write_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size())
        out << std::string(widths[i] - row[i].size() + 2, ' ');
    }
    out << "\n";
  };
  write_row(header);
  for (const auto& row : rows) write_row(row);
}

void run_check(const PrimeGraph& g, OutputFormat format, std::ostream& out) {
  const auto components = connected_components(g);
  const auto condition = satisfies_palfy_condition(g);
  const auto classification = classify(g);

  if (format == OutputFormat::json) {
    ordered_json doc;
    doc["order"] = g.order();
    doc["vertices"] = vertex_strings(
        {g.vertices().begin(), g.vertices().end()});
    ordered_json edges = ordered_json::array();
    for (const auto& [p, q] : g.edges())
      edges.push_back({std::to_string(p), std::to_string(q)});
    doc["edges"] = edges;
    ordered_json comps = ordered_json::array();
    for (const auto& component : components)
      comps.push_back(vertex_strings(component));
    doc["components"] = comps;

    ordered_json cond;
    cond["satisfied"] = condition.satisfied;
    if (!condition.satisfied) cond["witness"] = vertex_strings(condition.witness);
    doc["palfy_condition"] = cond;

    ordered_json cls;
    cls["kind"] = std::string(to_string(classification.kind));
    if (classification.pair) {
      cls["pair"] = {{"a", to_decimal(classification.pair->a)},
                     {"b", to_decimal(classification.pair->b)}};
      cls["inequality_holds"] = classification.inequality_holds;
    }
    if (classification.reason) {
      cls["reason"] = std::string(to_string(*classification.reason));
      cls["witness"] = vertex_strings(classification.witness);
    }
    doc["classification"] = cls;
    out << doc.dump(2) << "\n";
    return;
  }

  if (format != OutputFormat::plain)
    throw std::invalid_argument("check supports only plain or json output");

  out << "order: " << g.order() << "\n";
  out << "vertices: "
      << (g.vertices().empty()
              ? "none"
              : join({g.vertices().begin(), g.vertices().end()}))
      << "\n";
  out << "edges:";
  if (g.edges().empty()) {
    out << " none";
  } else {
    for (const auto& [p, q] : g.edges()) out << " " << p << "-" << q;
  }
  out << "\n";
  out << "components:";
  if (components.empty()) {
    out << " none";
  } else {
    for (const auto& component : components) out << " {" << join(component) << "}";
  }
  out << "\n";
  if (condition.satisfied) {
    out << "palfy_condition: satisfied\n";
  } else {
    out << "palfy_condition: violated (witness: " << join(condition.witness)
        << ")\n";
  }
  out << "classification: " << to_string(classification.kind) << "\n";
  if (classification.pair) {
    out << "component_pair: (" << to_decimal(classification.pair->a) << ", "
        << to_decimal(classification.pair->b) << ")\n";
    out << "palfy_inequality: "
        << (classification.inequality_holds ? "satisfied" : "violated") << "\n";
  }
  if (classification.reason) {
    out << "violation_reason: " << to_string(*classification.reason) << "\n";
    out << "violation_witness: " << join(classification.witness) << "\n";
  }
}

void run_count(const GraphOrder& order, OutputFormat format,
               std::ostream& out) {
  const unsigned c = c_of_n(order);
  switch (format) {
    case OutputFormat::plain:
      out << c << "\n";
      return;
    case OutputFormat::json: {
      ordered_json doc{{"n", to_decimal(order.value())}, {"c", c}};
      out << doc.dump(2) << "\n";
      return;
    }
    case OutputFormat::csv:
    case OutputFormat::markdown:
      out << render(std::vector<Table1Row>{{order.value(), c}},
                    to_table_format(format));
      return;
  }
}

void run_rawcount(const GraphOrder& order, OutputFormat format,
                  std::ostream& out) {
  const BigInt raw = raw_pair_count(order);
  switch (format) {
    case OutputFormat::plain:
      out << to_decimal(raw) << "\n";
      return;
    case OutputFormat::json: {
      ordered_json doc{{"n", to_decimal(order.value())},
                       {"raw_pairs", to_decimal(raw)}};
      out << doc.dump(2) << "\n";
      return;
    }
    case OutputFormat::csv:
      out << "n,raw_pairs\n"
          << to_decimal(order.value()) << "," << to_decimal(raw) << "\n";
      return;
    case OutputFormat::markdown:
      out << "| n | raw_pairs |\n| --- | --- |\n| " << to_decimal(order.value())
          << " | " << to_decimal(raw) << " |\n";
      return;
  }
}

void run_pairs(const GraphOrder& order, OutputFormat format,
               std::ostream& out) {
  const auto pairs = valid_pairs(order);
  switch (format) {
    case OutputFormat::plain:
      for (const auto& pair : pairs)
        out << to_decimal(pair.a) << " " << to_decimal(pair.b) << "\n";
      return;
    case OutputFormat::json: {
      ordered_json doc = ordered_json::array();
      for (const auto& pair : pairs)
        doc.push_back({{"a", to_decimal(pair.a)}, {"b", to_decimal(pair.b)}});
      out << doc.dump(2) << "\n";
      return;
    }
    case OutputFormat::csv:
      out << "a,b\n";
      for (const auto& pair : pairs)
        out << to_decimal(pair.a) << "," << to_decimal(pair.b) << "\n";
      return;
    case OutputFormat::markdown:
      out << "| a | b |\n| --- | --- |\n";
      for (const auto& pair : pairs)
        out << "| " << to_decimal(pair.a) << " | " << to_decimal(pair.b)
            << " |\n";
      return;
  }
}

void run_range(unsigned alpha, OutputFormat format, std::ostream& out) {
  const OrderRange range = order_range_for_count(alpha);
  const std::string min_n = to_decimal(range.min_n);
  const std::string max_n = to_decimal(range.max_n);
  const std::string count = to_decimal(range.cardinality());
  switch (format) {
    case OutputFormat::plain:
      out << "alpha " << range.alpha << "\n";
      out << "min_n " << min_n << "\n";
      out << "max_n " << max_n << "\n";
      out << "count " << count << "\n";
      return;
    case OutputFormat::json: {
      ordered_json doc{{"alpha", range.alpha},
                       {"min_n", min_n},
                       {"max_n", max_n},
                       {"count", count}};
      out << doc.dump(2) << "\n";
      return;
    }
    case OutputFormat::csv:
      out << "alpha,min_n,max_n,count\n"
          << range.alpha << "," << min_n << "," << max_n << "," << count
          << "\n";
      return;
    case OutputFormat::markdown:
      out << "| alpha | min_n | max_n | count |\n| --- | --- | --- | --- |\n| "
          << range.alpha << " | " << min_n << " | " << max_n << " | " << count
          << " |\n";
      return;
  }
}

std::vector<GraphOrder> parse_order_list(const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream stream(normalized);
  std::vector<GraphOrder> orders;
  std::string token;
  while (stream >> token) orders.push_back(GraphOrder::parse(token));
  if (orders.empty()) throw std::invalid_argument("empty order list");
  return orders;
}

void run_table1(const std::vector<GraphOrder>& orders, OutputFormat format,
                bool separators, std::ostream& out) {
  const auto rows = table1(orders);
  if (format == OutputFormat::plain) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows)
      cells.push_back({to_decimal(row.n, separators), std::to_string(row.c)});
    write_plain_table({"n", "c(n)"}, cells, out);
    return;
  }
  out << render(rows, to_table_format(format), separators);
}

void run_table2(unsigned max_alpha, OutputFormat format, bool separators,
                std::ostream& out) {
  const auto rows = table2(max_alpha);
  if (format == OutputFormat::plain) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows)
      cells.push_back({std::to_string(row.alpha),
                       to_decimal(row.min_n, separators),
                       to_decimal(row.max_n, separators)});
    write_plain_table({"alpha", "min_n", "max_n"}, cells, out);
    return;
  }
  out << render(rows, to_table_format(format), separators);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Disconnected character degree graphs: structure checks and "
               "component-pair counting"};
  app.require_subcommand(1);

  std::string degrees_src;
  std::string edges_src;
  std::string number;
  std::string alpha_text;
  std::string orders_text;
  std::string format_token = "plain";
  bool separators = false;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_token,
                    "Output format: plain, json, csv or markdown")
        ->capture_default_str();
  };
  const auto add_sources = [&](CLI::App* sub) {
    sub->add_option("--degrees", degrees_src,
                    "Character degrees (inline text, file path, or '-')");
    sub->add_option("--edges", edges_src,
                    "Edge list (inline text, file path, or '-')");
  };

  auto* check = app.add_subcommand(
      "check", "Report Palfy condition, classification and inequality");
  add_sources(check);
  add_format(check);
  check->callback([&] {
    run_check(load_graph(degrees_src, edges_src, in),
              parse_output_format(format_token), out);
  });

  auto* count = app.add_subcommand("count", "Print c(n)");
  count->add_option("n", number, "Graph order (arbitrary precision)")
      ->required();
  add_format(count);
  count->callback([&] {
    run_count(GraphOrder::parse(number), parse_output_format(format_token),
              out);
  });

  auto* pairs = app.add_subcommand(
      "pairs", "List the component size pairs satisfying the inequality");
  pairs->add_option("n", number, "Graph order (arbitrary precision)")
      ->required();
  add_format(pairs);
  pairs->callback([&] {
    run_pairs(GraphOrder::parse(number), parse_output_format(format_token),
              out);
  });

  auto* rawcount = app.add_subcommand(
      "rawcount", "Print floor(n/2), the unfiltered pair count");
  rawcount->add_option("n", number, "Graph order (arbitrary precision)")
      ->required();
  add_format(rawcount);
  rawcount->callback([&] {
    run_rawcount(GraphOrder::parse(number), parse_output_format(format_token),
                 out);
  });

  auto* range = app.add_subcommand(
      "range", "Print the orders n with c(n) = alpha and their count");
  range->add_option("alpha", alpha_text, "Pair count")->required();
  add_format(range);
  range->callback([&] {
    run_range(static_cast<unsigned>(parse_alpha(alpha_text, kMaxRangeAlpha)),
              parse_output_format(format_token), out);
  });

  auto* t1 = app.add_subcommand("table1", "c(n) for a sample of orders");
  t1->add_option("--orders", orders_text,
                 "Comma- or space-separated orders (default: 10..10^30)");
  add_format(t1);
  t1->add_flag("--separators", separators, "Group digits in threes");
  t1->callback([&] {
    const auto orders = orders_text.empty() ? default_table1_orders()
                                            : parse_order_list(orders_text);
    run_table1(orders, parse_output_format(format_token), separators, out);
  });

  auto* t2 = app.add_subcommand("table2",
                                "Order ranges for each pair count alpha");
  t2->add_option("--max-alpha", alpha_text, "Largest alpha to list")
      ->capture_default_str();
  add_format(t2);
  t2->add_flag("--separators", separators, "Group digits in threes");
  t2->callback([&] {
    const unsigned max_alpha =
        alpha_text.empty()
            ? 10u
            : static_cast<unsigned>(parse_alpha(alpha_text, kMaxTableAlpha));
    run_table2(max_alpha, parse_output_format(format_token), separators, out);
  });

  auto* dot = app.add_subcommand("export-dot", "Emit the graph as DOT");
  add_sources(dot);
  dot->callback(
      [&] { out << to_dot(load_graph(degrees_src, edges_src, in)); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cdgraph::cli
