#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace rdm::cli {

enum class Format { Csv, Json };

struct Config {
  std::string command;
  std::vector<std::size_t> n;
  std::vector<std::size_t> k;
  std::optional<double> c;
  std::optional<int> q_max;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::optional<std::string> out;
  Format format = Format::Csv;
  std::optional<std::string> tw_table;
  /// --threshold-<metric> overrides.
  std::map<std::string, double> thresholds;
};

struct Metric {
  const char* name;
  const char* description;
  /// Empty for checks that only run when a threshold is given.
  std::optional<double> default_threshold;
};

/// Every metric accepted by --threshold-<metric>.
const std::vector<Metric>& metrics();

Report run_command(const Config& config);

Report cmd_sample(const Config& config);
Report cmd_density(const Config& config);
Report cmd_moments(const Config& config);
Report cmd_mp(const Config& config);
Report cmd_edge(const Config& config);
Report cmd_firstmodel(const Config& config);

}  // namespace rdm::cli
