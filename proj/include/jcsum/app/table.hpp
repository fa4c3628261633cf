#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace jcsum::app {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Column-oriented result table with `key=value` metadata.
struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// Shortest round-trip text at 17 significant digits, locale independent.
std::string format_number(double x);

/// `# key=value` lines, header row, comma-separated rows, LF endings.
void write_csv(std::ostream& os, const Table& t);
/// {"metadata": {...}, "columns": [...], "rows": [[...], ...]}
void write_json(std::ostream& os, const Table& t);

}  // namespace jcsum::app
