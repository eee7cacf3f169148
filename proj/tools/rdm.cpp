#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "cli/commands.hpp"
#include "rdm/error.hpp"
#include "rdm/version.hpp"

namespace {

// 0: every check passed; 1: a check failed; 2: bad invocation; 3: runtime failure.
enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kFailure = 3 };

void add_common_options(CLI::App& app, rdm::cli::Config& cfg) {
  app.add_option("--n", cfg.n, "system dimension(s), comma separated")->delimiter(',');
  app.add_option("--k", cfg.k, "environment dimension(s), comma separated")->delimiter(',');
  app.add_option("--c", cfg.c, "ratio k/n; k = ceil(c n)");
  app.add_option("--q-max", cfg.q_max, "largest moment order");
  app.add_option("--samples", cfg.samples, "Monte Carlo draws per (n, k) point");
  app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  app.add_option("--workers", cfg.workers, "worker threads (never changes results)")
      ->capture_default_str();
  app.add_option("--out", cfg.out, "output prefix; stdout when omitted");
  app.add_option_function<std::string>(
         "--format",
         [&cfg](const std::string& f) {
           cfg.format = f == "json" ? rdm::cli::Format::Json : rdm::cli::Format::Csv;
         },
         "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tw-table", cfg.tw_table, "Tracy-Widom GUE table (edge)")
      ->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
  rdm::cli::Config cfg;
  CLI::App app{"Random density matrices from the induced measures"};
  app.set_version_flag("--version", rdm::kVersion);
  app.require_subcommand(1);

  std::map<std::string, double> thresholds;
  const std::vector<std::pair<const char*, const char*>> commands{
      {"sample", "draw spectra and compare moments with their exact values"},
      {"density", "eigenvalue density curve with a Monte Carlo overlay (n <= 3)"},
      {"moments", "compare the three exact moment routes"},
      {"mp", "empirical spectral measure against Marchenko-Pastur"},
      {"edge", "largest eigenvalue location and fluctuations"},
      {"firstmodel", "fixed n, growing environment: distance to I/n and entropy"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common_options(*sub, cfg);
    for (const auto& m : rdm::cli::metrics()) {
      sub->add_option_function<double>(
          std::string("--threshold-") + m.name,
          [&thresholds, metric = std::string(m.name)](double v) { thresholds[metric] = v; },
          m.description);
    }
    sub->callback([&cfg, n = std::string(name)] { cfg.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  cfg.thresholds = thresholds;

  try {
    const auto start = std::chrono::steady_clock::now();
    auto report = rdm::cli::run_command(cfg);
    report.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool json = cfg.format == rdm::cli::Format::Json;
    if (!cfg.out) {
      json ? rdm::cli::write_json_stream(report, std::cout)
           : rdm::cli::write_csv_stream(report, std::cout);
    } else if (json) {
      rdm::cli::write_json_file(report, *cfg.out + ".json");
    } else {
      rdm::cli::write_csv_files(report, *cfg.out);
    }
    for (const auto& c : report.checks) {
      if (!c.pass) std::cerr << "check failed: " << c.metric << " (" << c.subject << ") = " << c.value << "\n";
    }
    return report.all_pass() ? kPass : kCheckFailed;
  } catch (const rdm::UsageError& e) {
    std::cerr << "rdm: " << e.what() << "\n";
    return kUsage;
  } catch (const rdm::ParameterError& e) {
    std::cerr << "rdm: " << e.what() << "\n";
    return kUsage;
  } catch (const rdm::DimensionError& e) {
    std::cerr << "rdm: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "rdm: " << e.what() << "\n";
    return kFailure;
  }
}
