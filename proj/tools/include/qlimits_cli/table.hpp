#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace qlimits::cli {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Column-named rows; every row has one cell per column.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// Real cells are printed as %.15e (16 significant digits).
std::string format_cell(const Cell& cell);

void write_csv(const Table& table, std::ostream& out);

/// Array of objects, one per row, keyed by column name. Real values are parsed
/// back from their CSV text so both formats carry identical numbers.
void write_json(const Table& table, std::ostream& out);

}  // namespace qlimits::cli
