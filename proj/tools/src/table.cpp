#include "qlimits_cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace qlimits::cli {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row width does not match the header");
  }
  rows.push_back(std::move(row));
}

namespace {

struct CellFormatter {
  std::string operator()(double v) const {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15e", v);
    return buf;
  }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(const std::string& v) const { return v; }
};

}  // namespace

std::string format_cell(const Cell& cell) { return std::visit(CellFormatter{}, cell); }

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << format_cell(row[c]);
    }
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto& cell = row[c];
      if (std::holds_alternative<double>(cell)) {
        const double v = std::get<double>(cell);
        // JSON has no NaN or infinity; emit null in that case.
        record[table.columns[c]] =
            std::isfinite(v) ? nlohmann::ordered_json(std::stod(format_cell(cell)))
                             : nlohmann::ordered_json(nullptr);
      } else if (std::holds_alternative<std::int64_t>(cell)) {
        record[table.columns[c]] = std::get<std::int64_t>(cell);
      } else {
        record[table.columns[c]] = std::get<std::string>(cell);
      }
    }
    doc.push_back(std::move(record));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace qlimits::cli
