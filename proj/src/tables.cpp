#include "cdgraph/tables.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cdgraph {

namespace {

std::string csv_field(std::string value) {
  if (value.find(',') == std::string::npos) return value;
  return "\"" + value + "\"";
}

struct ColumnSpec {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> cells;
};

std::string render_csv(const ColumnSpec& spec) {
  std::ostringstream out;
  for (std::size_t i = 0; i < spec.header.size(); ++i)
    out << (i ? "," : "") << csv_field(spec.header[i]);
  out << "\n";
  for (const auto& row : spec.cells) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << csv_field(row[i]);
    out << "\n";
  }
  return out.str();
}

std::string render_markdown(const ColumnSpec& spec) {
  std::ostringstream out;
  out << "|";
  for (const auto& h : spec.header) out << " " << h << " |";
  out << "\n|";
  for (std::size_t i = 0; i < spec.header.size(); ++i) out << " --- |";
  out << "\n";
  for (const auto& row : spec.cells) {
    out << "|";
    for (const auto& cell : row) out << " " << cell << " |";
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::vector<GraphOrder> default_table1_orders() {
  std::vector<GraphOrder> orders;
  for (const unsigned exponent : {1, 2, 3, 4, 5, 6, 9, 10, 15, 20, 25, 30}) {
    BigInt n = 1;
    for (unsigned i = 0; i < exponent; ++i) n *= 10;
    orders.emplace_back(std::move(n));
  }
  return orders;
}

std::vector<Table1Row> table1(const std::vector<GraphOrder>& orders) {
  std::vector<Table1Row> rows;
  rows.reserve(orders.size());
  for (const auto& order : orders)
    rows.push_back({order.value(), c_of_n(order)});
  return rows;
}

std::vector<Table2Row> table2(unsigned max_alpha) {
  if (max_alpha < 1) throw std::invalid_argument("max_alpha must be at least 1");
  std::vector<Table2Row> rows;
  rows.reserve(max_alpha);
  for (unsigned alpha = 1; alpha <= max_alpha; ++alpha) {
    const OrderRange range = order_range_for_count(alpha);
    rows.push_back({alpha, range.min_n, range.max_n});
  }
  return rows;
}

TableFormat parse_table_format(std::string_view token) {
  if (token == "json") return TableFormat::json;
  if (token == "csv") return TableFormat::csv;
  if (token == "markdown") return TableFormat::markdown;
  throw std::invalid_argument("unknown table format '" + std::string(token) +
                              "'");
}

std::string render(const std::vector<Table1Row>& rows, TableFormat format,
                   bool thousands_separators) {
  if (format == TableFormat::json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      doc.push_back({{"n", to_decimal(row.n, thousands_separators)},
                     {"c", row.c}});
    }
    return doc.dump(2) + "\n";
  }

  ColumnSpec spec{{"n", "c"}, {}};
  for (const auto& row : rows) {
    spec.cells.push_back(
        {to_decimal(row.n, thousands_separators), std::to_string(row.c)});
  }
  return format == TableFormat::csv ? render_csv(spec) : render_markdown(spec);
}

std::string render(const std::vector<Table2Row>& rows, TableFormat format,
                   bool thousands_separators) {
  if (format == TableFormat::json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      doc.push_back({{"alpha", row.alpha},
                     {"min_n", to_decimal(row.min_n, thousands_separators)},
                     {"max_n", to_decimal(row.max_n, thousands_separators)}});
    }
    return doc.dump(2) + "\n";
  }

  ColumnSpec spec{{"alpha", "min_n", "max_n"}, {}};
  for (const auto& row : rows) {
    spec.cells.push_back({std::to_string(row.alpha),
                          to_decimal(row.min_n, thousands_separators),
                          to_decimal(row.max_n, thousands_separators)});
  }
  return format == TableFormat::csv ? render_csv(spec) : render_markdown(spec);
}

}  // namespace cdgraph
