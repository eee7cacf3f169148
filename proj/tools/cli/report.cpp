#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "rdm/error.hpp"
#include "rdm/kernels.hpp"
#include "rdm/version.hpp"

namespace rdm::cli {
namespace {

constexpr int kSchemaVersion = 1;

std::ofstream open_for_writing(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw Error("failed writing " + path);
}

void write_metadata(const Report& r, std::ostream& out) {
  out << "# rdm " << kVersion << "\n";
  out << "# command: " << r.command << "\n";
  out << "# config:";
  for (const auto& [key, value] : r.config) out << ' ' << key << '=' << value;
  out << "\n";
  out << "# seed: " << r.seed << "\n";
  out << "# workers: " << r.workers << "\n";
  out << "# isa: " << kernels::isa_name(kernels::active_isa()) << "\n";
  out << "# wall_clock_seconds: " << format_cell(r.wall_clock_seconds) << "\n";
  for (const auto& n : r.notices) out << "# notice: " << n << "\n";
}

void write_rows(const std::vector<std::string>& columns,
                const std::vector<std::vector<Cell>>& rows, std::ostream& out) {
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << "\n";
  }
}

Table checks_table(const Report& r) {
  Table t{"checks", {"metric", "subject", "value", "threshold", "pass"}, {}};
  for (const auto& c : r.checks) {
    t.add_row({c.metric, c.subject, c.value,
               c.threshold ? Cell{*c.threshold} : Cell{std::string{}},
               std::int64_t{c.pass ? 1 : 0}});
  }
  return t;
}

nlohmann::ordered_json to_json(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  const double d = std::get<double>(cell);
  if (!std::isfinite(d)) return nullptr;
  return d;
}

nlohmann::ordered_json report_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  ordered_json meta;
  meta["version"] = kVersion;
  meta["command"] = r.command;
  ordered_json config = ordered_json::object();
  for (const auto& [key, value] : r.config) config[key] = value;
  meta["config"] = config;
  meta["seed"] = r.seed;
  meta["workers"] = r.workers;
  meta["isa"] = std::string(kernels::isa_name(kernels::active_isa()));
  meta["wall_clock_seconds"] = r.wall_clock_seconds;
  meta["notices"] = r.notices;
  doc["meta"] = meta;
  ordered_json data = ordered_json::object();
  for (const auto& t : r.tables) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json jr = ordered_json::array();
      for (const auto& c : row) jr.push_back(to_json(c));
      rows.push_back(std::move(jr));
    }
    data[t.name] = {{"columns", t.columns}, {"rows", std::move(rows)}};
  }
  doc["data"] = data;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"metric", c.metric},
                      {"subject", c.subject},
                      {"value", std::isfinite(c.value) ? ordered_json(c.value) : ordered_json()},
                      {"threshold", c.threshold ? ordered_json(*c.threshold) : ordered_json()},
                      {"pass", c.pass}});
  }
  doc["checks"] = checks;
  doc["pass"] = r.all_pass();
  return doc;
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw UsageError("table " + name + ": row has " + std::to_string(row.size()) +
                     " cells, expected " + std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

Table& Report::table(std::string name, std::vector<std::string> columns) {
  tables.push_back({std::move(name), std::move(columns), {}});
  return tables.back();
}

void Report::check_at_most(std::string metric, std::string subject, double value,
                           double threshold) {
  checks.push_back({std::move(metric), std::move(subject), value, threshold, value <= threshold});
}

void Report::check_at_least(std::string metric, std::string subject, double value,
                            double threshold) {
  checks.push_back({std::move(metric), std::move(subject), value, threshold, value >= threshold});
}

void Report::check_property(std::string metric, std::string subject, bool holds) {
  checks.push_back({std::move(metric), std::move(subject), holds ? 1.0 : 0.0, std::nullopt, holds});
}

bool Report::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  const double d = std::get<double>(cell);
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

void write_csv_files(const Report& report, const std::string& prefix) {
  auto emit = [&](const std::string& name, const std::vector<std::string>& columns,
                  const std::vector<std::vector<Cell>>& rows) {
    const std::string path = prefix + "." + name + ".csv";
    auto out = open_for_writing(path);
    write_metadata(report, out);
    write_rows(columns, rows, out);
    finish(out, path);
  };
  for (const auto& t : report.tables) emit(t.name, t.columns, t.rows);
  const Table checks = checks_table(report);
  emit(checks.name, checks.columns, checks.rows);
}

void write_csv_stream(const Report& report, std::ostream& out) {
  write_metadata(report, out);
  auto section = [&](const Table& t) {
    out << "# section: " << t.name << "\n";
    write_rows(t.columns, t.rows, out);
  };
  for (const auto& t : report.tables) section(t);
  section(checks_table(report));
}

void write_json_file(const Report& report, const std::string& path) {
  auto out = open_for_writing(path);
  write_json_stream(report, out);
  finish(out, path);
}

void write_json_stream(const Report& report, std::ostream& out) {
  out << report_json(report).dump(2) << "\n";
}

}  // namespace rdm::cli
