#include "commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "rdm/asymptotics.hpp"
#include "rdm/error.hpp"
#include "rdm/exact.hpp"
#include "rdm/kernels.hpp"
#include "rdm/montecarlo.hpp"
#include "rdm/sampling.hpp"
#include "rdm/spectra.hpp"

namespace rdm::cli {
namespace {

constexpr std::size_t kDensityGrid2 = 1001;  // odd, so 1/2 is a cell midpoint
constexpr std::size_t kDensityGrid3 = 100;
constexpr std::size_t kDensityBins = 50;
constexpr std::size_t kMpBins = 80;
constexpr std::size_t kMinDistributionSamples = 100;

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::optional<double> threshold(const Config& cfg, const std::string& metric) {
  if (auto it = cfg.thresholds.find(metric); it != cfg.thresholds.end()) return it->second;
  for (const auto& m : metrics()) {
    if (metric == m.name) return m.default_threshold;
  }
  throw UsageError("unknown metric " + metric);
}

std::size_t single(const std::vector<std::size_t>& values, const char* flag,
                   std::optional<std::size_t> fallback) {
  if (values.empty()) {
    if (fallback) return *fallback;
    throw UsageError(std::string("--") + flag + " is required");
  }
  if (values.size() != 1) {
    throw UsageError(std::string("--") + flag + " takes a single value for this command");
  }
  return values.front();
}

std::size_t k_for(std::size_t n, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw ParameterError("--c must be positive");
  const double k = std::ceil(c * static_cast<double>(n) - 1e-9);
  return static_cast<std::size_t>(std::max(1.0, k));
}

/// (n, k) points of the run: n list times k list, or k = ceil(c n).
std::vector<EnsembleParams> ensembles(const Config& cfg, std::vector<std::size_t> default_n,
                                      std::optional<double> default_c) {
  const auto ns = cfg.n.empty() ? default_n : cfg.n;
  if (ns.empty()) throw UsageError("--n is required");
  if (!cfg.k.empty() && cfg.c) throw UsageError("give either --k or --c, not both");
  std::vector<EnsembleParams> out;
  if (!cfg.k.empty()) {
    if (ns.size() > 1 && cfg.k.size() > 1 && ns.size() != cfg.k.size()) {
      throw UsageError("--n and --k lists must have equal length when both have several values");
    }
    const std::size_t count = std::max(ns.size(), cfg.k.size());
    for (std::size_t i = 0; i < count; ++i) {
      out.emplace_back(ns[ns.size() == 1 ? 0 : i], cfg.k[cfg.k.size() == 1 ? 0 : i]);
    }
    return out;
  }
  const std::optional<double> c = cfg.c ? cfg.c : default_c;
  for (std::size_t n : ns) out.emplace_back(n, c ? k_for(n, *c) : n);
  return out;
}

std::uint64_t experiment_seed(const Config& cfg, const EnsembleParams& p) {
  return derive_seed(cfg.seed, p.n, p.k);
}

Report start(const Config& cfg, std::vector<std::pair<std::string, std::string>> resolved) {
  Report r;
  r.command = cfg.command;
  r.seed = cfg.seed;
  r.workers = cfg.workers;
  r.config = std::move(resolved);
  r.config.emplace_back("seed", std::to_string(cfg.seed));
  r.config.emplace_back("format", cfg.format == Format::Csv ? "csv" : "json");
  for (const auto& [metric, value] : cfg.thresholds) {
    std::ostringstream s;
    s.precision(17);
    s << value;
    r.config.emplace_back("threshold-" + metric, s.str());
  }
  return r;
}

std::string label(const EnsembleParams& p) {
  return "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::vector<double> uniform_edges(double lo, double hi, std::size_t bins) {
  std::vector<double> e(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    e[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
  }
  e.back() = hi;
  return e;
}

std::vector<std::string> lambda_columns(std::string first, std::size_t n) {
  std::vector<std::string> cols{std::move(first)};
  for (std::size_t i = 1; i <= n; ++i) cols.push_back("lambda_" + std::to_string(i));
  return cols;
}

}  // namespace

const std::vector<Metric>& metrics() {
  static const std::vector<Metric> all{
      {"z", "largest |z-score| of a Monte Carlo mean against its exact value", 4.0},
      {"riemann", "|grid Riemann sum of the emitted density - 1|", 1e-4},
      {"chi2-p", "smallest chi-square p-value of the eigenvalue histogram", 1e-3},
      {"discrepancy", "largest relative disagreement between moment routes", 1e-10},
      {"ks", "largest KS distance of a rescaled spectrum to Marchenko-Pastur", 0.05},
      {"edge-mean", "relative error of the mean rescaled largest eigenvalue", 0.02},
      {"sd-ratio", "|sd(t) at the smallest n / sd(t) at the largest n - 1|", 0.25},
      {"tw-ks", "KS distance of the edge statistic to the Tracy-Widom table", 0.15},
      {"log-n-gap", "|mean entropy at the largest k - log n| (off unless given)", std::nullopt},
  };
  return all;
}

Report cmd_sample(const Config& cfg) {
  const std::size_t n = single(cfg.n, "n", std::nullopt);
  const EnsembleParams p(n, single(cfg.k, "k", n));
  const std::size_t samples = cfg.samples.value_or(1000);
  const int q_max = cfg.q_max.value_or(4);
  if (q_max < 1) throw UsageError("--q-max must be at least 1");
  Report r = start(cfg, {{"n", std::to_string(p.n)},
                         {"k", std::to_string(p.k)},
                         {"samples", std::to_string(samples)},
                         {"q-max", std::to_string(q_max)}});

  const auto spectra = map_draws(experiment_seed(cfg, p), samples, cfg.workers, [&](RngStream& rng) {
    return density_spectrum(sample_density_matrix(p.n, p.k, rng)).values;
  });

  auto& rows = r.table("spectra", lambda_columns("draw", p.n));
  std::vector<std::vector<double>> power(q_max, std::vector<double>(samples));
  std::vector<double> sums(q_max);
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<Cell> row{static_cast<std::int64_t>(i)};
    for (double v : spectra[i]) row.emplace_back(v);
    rows.add_row(std::move(row));
    kernels::power_sums(spectra[i], sums);
    for (int q = 0; q < q_max; ++q) power[q][i] = sums[q];
  }

  auto& summary = r.table("summary", {"q", "exact", "mc_mean", "std_error", "z_score"});
  const double z_max = *threshold(cfg, "z");
  for (int q = 1; q <= q_max; ++q) {
    const double exact = moment_recurrence(p, q);
    const auto s = summarize(power[q - 1]);
    const double z = samples > 1 ? s.z_score(exact) : NAN;
    summary.add_row({std::int64_t{q}, exact, s.mean, s.std_error, z});
    // tr rho = 1 holds to rounding, so its z-score carries no information.
    if (q >= 2 && samples > 1) r.check_at_most("z", "q=" + std::to_string(q), std::abs(z), z_max);
  }
  return r;
}

Report cmd_density(const Config& cfg) {
  const std::size_t n = single(cfg.n, "n", 2);
  const EnsembleParams p(n, single(cfg.k, "k", std::nullopt));
  if (n < 2 || n > 3) throw UsageError("density grids are supported for n = 2 and n = 3 only");
  if (p.k < p.n) throw ParameterError("density needs k >= n; swap n and k");
  const std::size_t samples = cfg.samples.value_or(10000);
  Report r = start(cfg, {{"n", std::to_string(p.n)},
                         {"k", std::to_string(p.k)},
                         {"samples", std::to_string(samples)}});
  const auto phi = [&](std::span<const double> lambda) { return std::exp(log_density_eigs(p, lambda)); };

  double riemann = 0.0;
  if (n == 2) {
    auto& curve = r.table("curve", {"lambda_1", "density"});
    for (std::size_t i = 0; i < kDensityGrid2; ++i) {
      const double x = (static_cast<double>(i) + 0.5) / kDensityGrid2;
      const std::array<double, 2> lambda{x, 1.0 - x};
      const double f = phi(lambda);
      curve.add_row({x, f});
      riemann += f;
    }
    riemann /= kDensityGrid2;
  } else {
    // The 2 G^2 congruent triangles tiling the simplex, each sampled at the
    // three interior points of the symmetric degree-2 rule, so equal weights
    // still integrate quadratics exactly.
    auto& curve = r.table("curve", {"lambda_1", "lambda_2", "density"});
    const double g = kDensityGrid3;
    for (std::size_t i = 0; i < kDensityGrid3; ++i) {
      for (std::size_t j = 0; i + j < kDensityGrid3; ++j) {
        for (int up = 1; up >= 0; --up) {
          if (!up && i + j + 1 >= kDensityGrid3) continue;
          const double x = static_cast<double>(i), y = static_cast<double>(j);
          const std::array<std::array<double, 2>, 3> v =
              up ? std::array<std::array<double, 2>, 3>{{{x, y}, {x + 1, y}, {x, y + 1}}}
                 : std::array<std::array<double, 2>, 3>{{{x + 1, y}, {x, y + 1}, {x + 1, y + 1}}};
          for (int a = 0; a < 3; ++a) {
            const auto& va = v[a];
            const auto& vb = v[(a + 1) % 3];
            const auto& vc = v[(a + 2) % 3];
            const double l1 = (4.0 * va[0] + vb[0] + vc[0]) / (6.0 * g);
            const double l2 = (4.0 * va[1] + vb[1] + vc[1]) / (6.0 * g);
            const std::array<double, 3> lambda{l1, l2, 1.0 - l1 - l2};
            const double f = phi(lambda);
            curve.add_row({l1, l2, f});
            riemann += f;
          }
        }
      }
    }
    riemann /= 3.0;
    riemann /= 2.0 * g * g;
  }
  r.check_at_most("riemann", label(p), std::abs(riemann - 1.0), *threshold(cfg, "riemann"));

  if (samples == 0) return r;
  // Draw i reports its eigenvalues in the i-th of the n! orders, so the
  // overlay follows the law of the unordered eigenvalues.
  const auto spectra = map_draws(experiment_seed(cfg, p), samples, cfg.workers, [&](RngStream& rng) {
    return density_spectrum(sample_density_matrix(p.n, p.k, rng)).values;
  });
  if (n == 2) {
    std::vector<double> first(samples);
    for (std::size_t i = 0; i < samples; ++i) first[i] = spectra[i][i % 2];
    const auto edges = uniform_edges(0.0, 1.0, kDensityBins);
    auto mass = histogram(EmpiricalMeasure::uniform(first), edges);
    std::vector<double> counts(kDensityBins), probs(kDensityBins);
    auto& hist = r.table("histogram", {"bin_lo", "bin_hi", "count", "empirical_density", "exact_density"});
    for (std::size_t b = 0; b < kDensityBins; ++b) {
      const double width = edges[b + 1] - edges[b];
      counts[b] = std::round(mass[b] * static_cast<double>(samples));
      probs[b] = eigenvalue_mass_n2(p, edges[b], edges[b + 1]);
      hist.add_row({edges[b], edges[b + 1], static_cast<std::int64_t>(counts[b]), mass[b] / width,
                    probs[b] / width});
    }
    const auto chi = chi_square_test(counts, probs);
    r.check_at_least("chi2-p", label(p), chi.p_value, *threshold(cfg, "chi2-p"));
  } else {
    static constexpr std::array<std::array<int, 3>, 6> kOrders{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    auto& points = r.table("points", {"draw", "lambda_1", "lambda_2"});
    for (std::size_t i = 0; i < samples; ++i) {
      const auto& o = kOrders[i % 6];
      points.add_row({static_cast<std::int64_t>(i), spectra[i][o[0]], spectra[i][o[1]]});
    }
    r.notices.push_back("n = 3 overlay is emitted as raw points; no chi-square test");
  }
  return r;
}

Report cmd_moments(const Config& cfg) {
  const std::size_t n = single(cfg.n, "n", std::nullopt);
  const EnsembleParams p(n, single(cfg.k, "k", n));
  const int q_max = cfg.q_max.value_or(10);
  if (q_max < 1) throw UsageError("--q-max must be at least 1");
  Report r = start(cfg, {{"n", std::to_string(p.n)},
                         {"k", std::to_string(p.k)},
                         {"q-max", std::to_string(q_max)}});
  auto& t = r.table("moments", {"q", "explicit", "recurrence", "wishart_bridge", "max_rel_discrepancy"});
  double worst = 0.0;
  for (int q = 1; q <= q_max; ++q) {
    const auto route = [&](const char* name, auto&& f) {
      try {
        return f();
      } catch (const RangeError& e) {
        throw RangeError(std::string(name) + " route unavailable at q=" + std::to_string(q) +
                         ": " + e.what());
      }
    };
    const double e = route("explicit", [&] { return moment_explicit(p, q); });
    const double rec = moment_recurrence(p, q);
    const double b = route("wishart-bridge", [&] { return moment_from_wishart(p, q); });
    const double d = std::max(std::abs(e - rec), std::abs(b - rec)) / rec;
    worst = std::max(worst, d);
    t.add_row({std::int64_t{q}, e, rec, b, d});
  }
  r.check_at_most("discrepancy", label(p), worst, *threshold(cfg, "discrepancy"));
  return r;
}

Report cmd_mp(const Config& cfg) {
  const auto points = ensembles(cfg, {1000}, 1.0);
  const std::size_t samples = cfg.samples.value_or(1);
  if (samples == 0) throw UsageError("--samples must be positive");
  Report r = start(cfg, {{"n", join(cfg.n.empty() ? std::vector<std::size_t>{1000} : cfg.n)},
                         {"k", join([&] {
                            std::vector<std::size_t> ks;
                            for (const auto& p : points) ks.push_back(p.k);
                            return ks;
                          }())},
                         {"samples", std::to_string(samples)}});
  auto& ks_table = r.table("ks", {"n", "k", "draw", "ks", "min_location", "max_location"});
  auto& hist = r.table("histogram", {"n", "k", "bin_lo", "bin_hi", "empirical_density", "mp_density"});
  auto& summary = r.table("summary", {"n", "k", "c", "median_ks", "max_ks"});
  const double ks_max = *threshold(cfg, "ks");
  std::vector<double> medians;

  struct DrawResult {
    double ks, lo, hi;
    std::vector<double> mass;
  };
  for (const auto& p : points) {
    const MarchenkoPastur law(p.c());
    const double w = law.b() - law.a();
    const auto edges = uniform_edges(std::min(0.0, law.a()) - 0.05 * w, law.b() + 0.1 * w, kMpBins);
    const auto draws = map_draws(experiment_seed(cfg, p), samples, cfg.workers, [&](RngStream& rng) {
      const bool first = rng.stream_index() == 0;
      const auto emp = empirical_measure(density_spectrum(sample_density_matrix(p.n, p.k, rng)),
                                         Rescale::DensityBulk);
      const auto sorted = emp.sorted();
      return DrawResult{ks_distance(emp, law), sorted.atoms.front().location,
                        sorted.atoms.back().location,
                        first ? histogram(emp, edges) : std::vector<double>{}};
    });
    std::vector<double> ks;
    for (std::size_t i = 0; i < samples; ++i) {
      ks.push_back(draws[i].ks);
      ks_table.add_row({static_cast<std::int64_t>(p.n), static_cast<std::int64_t>(p.k),
                        static_cast<std::int64_t>(i), draws[i].ks, draws[i].lo, draws[i].hi});
    }
    for (std::size_t b = 0; b < kMpBins; ++b) {
      const double width = edges[b + 1] - edges[b];
      const double expected = law.cdf_left(edges[b + 1]) - law.cdf_left(edges[b]);
      hist.add_row({static_cast<std::int64_t>(p.n), static_cast<std::int64_t>(p.k), edges[b],
                    edges[b + 1], draws[0].mass[b] / width, expected / width});
    }
    const double med = median(ks);
    const double worst = *std::max_element(ks.begin(), ks.end());
    medians.push_back(med);
    summary.add_row({static_cast<std::int64_t>(p.n), static_cast<std::int64_t>(p.k), p.c(), med, worst});
    r.check_at_most("ks", label(p), worst, ks_max);
  }
  if (points.size() >= 2) {
    r.check_property("ks-trend", label(points.front()) + " -> " + label(points.back()),
                     medians.back() < medians.front());
  }
  return r;
}

Report cmd_edge(const Config& cfg) {
  const auto points = ensembles(cfg, {1000}, 1.0);
  const std::size_t samples = cfg.samples.value_or(200);
  if (samples < 2) throw UsageError("--samples must be at least 2");
  std::vector<std::size_t> ks;
  for (const auto& p : points) ks.push_back(p.k);
  Report r = start(cfg, {{"n", join(cfg.n.empty() ? std::vector<std::size_t>{1000} : cfg.n)},
                         {"k", join(ks)},
                         {"samples", std::to_string(samples)},
                         {"tw-table", cfg.tw_table.value_or("")}});
  const bool distributional = samples >= kMinDistributionSamples;
  std::optional<TracyWidomTable> tw;
  if (cfg.tw_table) {
    tw = TracyWidomTable::load(*cfg.tw_table);
  } else {
    r.notices.push_back("no Tracy-Widom table supplied; KS section omitted");
  }
  if (!distributional) {
    r.notices.push_back("fewer than 100 samples; distributional checks omitted");
  }

  auto& draws_table = r.table("draws", {"n", "k", "draw", "lambda_max", "scaled", "t"});
  auto& summary = r.table("summary", {"n", "k", "edge", "mean_scaled", "sd_scaled", "mean_t", "sd_t", "se_t"});
  Table* tw_table = tw && distributional
                        ? &r.table("tracy_widom", {"n", "k", "ks", "median_t", "tw_median", "tw_mean"})
                        : nullptr;
  std::vector<double> sds;
  for (const auto& p : points) {
    const auto lmax = map_draws(experiment_seed(cfg, p), samples, cfg.workers, [&](RngStream& rng) {
      return largest_eigenvalue(density_spectrum(sample_density_matrix(p.n, p.k, rng)));
    });
    std::vector<double> scaled(samples), t(samples);
    for (std::size_t i = 0; i < samples; ++i) {
      scaled[i] = static_cast<double>(p.k) * lmax[i];
      t[i] = edge_rescale_density(lmax[i], p);
      draws_table.add_row({static_cast<std::int64_t>(p.n), static_cast<std::int64_t>(p.k),
                           static_cast<std::int64_t>(i), lmax[i], scaled[i], t[i]});
    }
    const double edge = std::pow(std::sqrt(p.c()) + 1.0, 2);
    const auto s_scaled = summarize(scaled);
    const auto s_t = summarize(t);
    const double sd_t = std::sqrt(s_t.variance);
    sds.push_back(sd_t);
    summary.add_row({static_cast<std::int64_t>(p.n), static_cast<std::int64_t>(p.k), edge,
                     s_scaled.mean, std::sqrt(s_scaled.variance), s_t.mean, sd_t, s_t.std_error});
    r.check_at_most("edge-mean", label(p), std::abs(s_scaled.mean - edge) / edge,
                    *threshold(cfg, "edge-mean"));
    r.check_property("t-mean-negative", label(p), s_t.mean < 0.0);
    if (tw_table) {
      const double ks_tw = ks_distance(EmpiricalMeasure::uniform(t), *tw);
      tw_table->add_row({static_cast<std::int64_t>(p.n), static_cast<std::int64_t>(p.k), ks_tw,
                         median(t), tw->median(), tw->mean()});
      r.check_at_most("tw-ks", label(p), ks_tw, *threshold(cfg, "tw-ks"));
    }
  }
  if (distributional && points.size() >= 2) {
    r.check_at_most("sd-ratio", label(points.front()) + " vs " + label(points.back()),
                    std::abs(sds.front() / sds.back() - 1.0), *threshold(cfg, "sd-ratio"));
  }
  return r;
}

Report cmd_firstmodel(const Config& cfg) {
  const std::size_t n = single(cfg.n, "n", 2);
  if (n < 2) throw UsageError("firstmodel needs n >= 2");
  if (cfg.c) throw UsageError("firstmodel takes a --k list, not --c");
  const std::vector<std::size_t> k_list = cfg.k.empty() ? std::vector<std::size_t>{2, 10, 100} : cfg.k;
  const std::size_t samples = cfg.samples.value_or(10000);
  if (samples < 2) throw UsageError("--samples must be at least 2");
  Report r = start(cfg, {{"n", std::to_string(n)}, {"k", join(k_list)}, {"samples", std::to_string(samples)}});

  auto& summary = r.table(
      "summary", {"n", "k", "alpha", "mc_distance", "distance_se", "exact_distance", "distance_z",
                  "dirichlet_mc_distance", "dirichlet_se", "dirichlet_distance", "dirichlet_z",
                  "mc_entropy", "entropy_se", "page_entropy", "entropy_z", "log_n"});
  auto& points = r.table("points", lambda_columns("k", n));
  points.columns.insert(points.columns.begin() + 1, "draw");
  const double z_max = *threshold(cfg, "z");
  const double center = 1.0 / static_cast<double>(n);
  const double log_n = std::log(static_cast<double>(n));
  auto distance = [&](std::span<const double> x) {
    double d = 0.0;
    for (double v : x) d += (v - center) * (v - center);
    return d;
  };

  std::vector<std::pair<std::size_t, double>> by_k;
  double entropy_at_largest_k = NAN;
  std::size_t largest_k = 0;
  for (std::size_t k : k_list) {
    const EnsembleParams p(n, k);
    if (k < n) throw ParameterError("firstmodel needs k >= n");
    const double alpha = static_cast<double>(k - n + 1);
    const auto spectra = map_draws(experiment_seed(cfg, p), samples, cfg.workers, [&](RngStream& rng) {
      return density_spectrum(sample_density_matrix(n, k, rng)).values;
    });
    const auto dirichlet = map_draws(derive_seed(cfg.seed, n, k | (std::uint64_t{1} << 63)), samples,
                                     cfg.workers, [&](RngStream& rng) {
                                       return distance(sample_dirichlet(n, alpha, rng).coords);
                                     });
    std::vector<double> dist(samples), entropy(samples);
    for (std::size_t i = 0; i < samples; ++i) {
      dist[i] = distance(spectra[i]);
      entropy[i] = von_neumann_entropy(Spectrum{spectra[i], std::nullopt, Rescale::None});
      std::vector<Cell> row{static_cast<std::int64_t>(k), static_cast<std::int64_t>(i)};
      for (double v : spectra[i]) row.emplace_back(v);
      points.add_row(std::move(row));
    }
    // E sum (lambda_i - 1/n)^2 = E tr rho^2 - 1/n exactly.
    const double exact_distance = moment_recurrence(p, 2) - center;
    const double dirichlet_distance = dirichlet_mean_sq_distance(n, alpha);
    const double page = page_entropy(p);
    const auto sd = summarize(dist), sdir = summarize(dirichlet), se = summarize(entropy);
    summary.add_row({static_cast<std::int64_t>(n), static_cast<std::int64_t>(k), alpha, sd.mean,
                     sd.std_error, exact_distance, sd.z_score(exact_distance), sdir.mean,
                     sdir.std_error, dirichlet_distance, sdir.z_score(dirichlet_distance), se.mean,
                     se.std_error, page, se.z_score(page), log_n});
    const std::string subject = label(p);
    r.check_at_most("z", "distance " + subject, std::abs(sd.z_score(exact_distance)), z_max);
    r.check_at_most("z", "dirichlet " + subject, std::abs(sdir.z_score(dirichlet_distance)), z_max);
    r.check_at_most("z", "entropy " + subject, std::abs(se.z_score(page)), z_max);
    by_k.emplace_back(k, sd.mean);
    if (k >= largest_k) {
      largest_k = k;
      entropy_at_largest_k = se.mean;
    }
  }
  if (by_k.size() >= 2) {
    std::sort(by_k.begin(), by_k.end());
    bool decreasing = true;
    for (std::size_t i = 1; i < by_k.size(); ++i) decreasing = decreasing && by_k[i].second < by_k[i - 1].second;
    r.check_property("distance-trend", "n=" + std::to_string(n), decreasing);
  }
  if (const auto gap = threshold(cfg, "log-n-gap")) {
    r.check_at_most("log-n-gap", "n=" + std::to_string(n) + " k=" + std::to_string(largest_k),
                    std::abs(entropy_at_largest_k - log_n), *gap);
  }
  return r;
}

Report run_command(const Config& cfg) {
  if (cfg.workers == 0) throw UsageError("--workers must be positive");
  if (cfg.command == "sample") return cmd_sample(cfg);
  if (cfg.command == "density") return cmd_density(cfg);
  if (cfg.command == "moments") return cmd_moments(cfg);
  if (cfg.command == "mp") return cmd_mp(cfg);
  if (cfg.command == "edge") return cmd_edge(cfg);
  if (cfg.command == "firstmodel") return cmd_firstmodel(cfg);
  throw UsageError("unknown command " + cfg.command);
}

}  // namespace rdm::cli
