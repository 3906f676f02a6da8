#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cdgraph/counting.hpp"

namespace cdgraph {

struct Table1Row {
  BigInt n;
  unsigned c = 0;

  bool operator==(const Table1Row&) const = default;
};

struct Table2Row {
  unsigned alpha = 0;
  BigInt min_n;
  BigInt max_n;

  bool operator==(const Table2Row&) const = default;
};

// The default order sample: 10^1..10^6, 10^9, 10^10, 10^15, 10^20, 10^25,
// 10^30.
std::vector<GraphOrder> default_table1_orders();

// One row per order, in input order, with c = c_of_n(n).
std::vector<Table1Row> table1(const std::vector<GraphOrder>& orders);

// Rows for alpha = 1..max_alpha with the order range sharing that count.
std::vector<Table2Row> table2(unsigned max_alpha);

enum class TableFormat { json, csv, markdown };

// Accepts "json", "csv" or "markdown"; throws on anything else.
TableFormat parse_table_format(std::string_view token);

// Deterministic serialization. Integers are exact decimal strings with no
// separators unless thousands_separators is set; JSON carries the
// arbitrary-precision columns as strings so downstream consumers cannot
// lose precision.
std::string render(const std::vector<Table1Row>& rows, TableFormat format,
                   bool thousands_separators = false);
std::string render(const std::vector<Table2Row>& rows, TableFormat format,
                   bool thousands_separators = false);

}  // namespace cdgraph
