#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rdm::cli {

using Cell = std::variant<std::int64_t, double, std::string>;

/// One data section: a header plus rows of cells.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// A threshold comparison, or a yes/no property when `threshold` is empty.
struct Check {
  std::string metric;
  std::string subject;
  double value = 0.0;
  std::optional<double> threshold;
  bool pass = false;
};

struct Report {
  std::string command;
  /// Every parameter needed to reproduce the run, in a fixed order.
  std::vector<std::pair<std::string, std::string>> config;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  double wall_clock_seconds = 0.0;
  std::vector<std::string> notices;
  std::deque<Table> tables;  // stable references across table()
  std::vector<Check> checks;

  Table& table(std::string name, std::vector<std::string> columns);
  /// value <= threshold
  void check_at_most(std::string metric, std::string subject, double value, double threshold);
  /// value >= threshold
  void check_at_least(std::string metric, std::string subject, double value, double threshold);
  void check_property(std::string metric, std::string subject, bool holds);
  bool all_pass() const;
};

/// Cells as text: integers verbatim, doubles with 17 significant digits.
std::string format_cell(const Cell& cell);

/// Writes `<prefix>.<section>.csv` for every table plus `<prefix>.checks.csv`.
/// Metadata lines start with '#'; the header row follows them.
void write_csv_files(const Report& report, const std::string& prefix);
/// All sections to one stream, each introduced by a `# section:` line.
void write_csv_stream(const Report& report, std::ostream& out);

void write_json_file(const Report& report, const std::string& path);
void write_json_stream(const Report& report, std::ostream& out);

}  // namespace rdm::cli
