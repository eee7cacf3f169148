#include "rdm/asymptotics.hpp"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "quadrature.hpp"
#include "rdm/error.hpp"

namespace rdm {
namespace {

constexpr double kQuadratureTolerance = 1e-10;

double edge_scale(double c) {
  const double root = std::sqrt(c);
  return (1.0 + root) * std::cbrt(1.0 + 1.0 / root);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw FormatError("line " + std::to_string(line) + ": cannot parse '" +
                      std::string(token) + "' as a number");
  }
  return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// Marchenko-Pastur

MarchenkoPastur::MarchenkoPastur(double c) : c_(c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw ParameterError("Marchenko-Pastur ratio must be positive, got " + std::to_string(c));
  }
  const double root = std::sqrt(c);
  a_ = (root - 1.0) * (root - 1.0);
  b_ = (root + 1.0) * (root + 1.0);
  atom_ = std::max(1.0 - c, 0.0);
}

double MarchenkoPastur::pdf(double x) const noexcept {
  if (x <= a_ || x >= b_ || x <= 0.0) return 0.0;
  return std::sqrt((x - a_) * (b_ - x)) / (2.0 * std::numbers::pi * x);
}

// With x = a + (b-a) sin^2 t the density element becomes
// (b-a)^2 sin^2 t cos^2 t / (pi x) dt, smooth on [0, pi/2].
double MarchenkoPastur::continuous_cdf(double x) const {
  if (x <= a_) return 0.0;
  const double width = b_ - a_;
  const double upper = x >= b_ ? std::numbers::pi / 2
                               : std::asin(std::sqrt((x - a_) / width));
  auto integrand = [&](double t) {
    const double s = std::sin(t);
    const double co = std::cos(t);
    if (a_ == 0.0) return width * co * co / std::numbers::pi;
    const double xt = a_ + width * s * s;
    return width * width * s * s * co * co / (std::numbers::pi * xt);
  };
  return detail::integrate(integrand, 0.0, upper, kQuadratureTolerance);
}

double MarchenkoPastur::cdf(double x) const {
  const double atom = x >= 0.0 ? atom_ : 0.0;
  return std::min(1.0, atom + continuous_cdf(x));
}

double MarchenkoPastur::cdf_left(double x) const {
  const double atom = x > 0.0 ? atom_ : 0.0;
  return std::min(1.0, atom + continuous_cdf(x));
}

double MarchenkoPastur::moment(int q) const {
  if (q < 1) throw DomainError("moment order must be >= 1");
  const double width = b_ - a_;
  auto integrand = [&](double t) {
    const double s = std::sin(t);
    const double co = std::cos(t);
    const double xt = a_ + width * s * s;
    // x^q times the density element; one power of x cancels the 1/x.
    return std::pow(xt, q - 1) * width * width * s * s * co * co / std::numbers::pi;
  };
  return detail::integrate(integrand, 0.0, std::numbers::pi / 2, 1e-9 * std::max(1.0, std::pow(b_, q)));
}

double MarchenkoPastur::continuous_mass() const { return continuous_cdf(b_); }

double mp_pdf(double x, const MarchenkoPastur& law) { return law.pdf(x); }
double mp_cdf(double x, const MarchenkoPastur& law) { return law.cdf(x); }
double mp_moment(int q, const MarchenkoPastur& law) { return law.moment(q); }

// ---------------------------------------------------------------------------
// Other reference laws

double StandardNormal::cdf(double x) const {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

DirichletMarginal::DirichletMarginal(std::size_t n, double alpha)
    : a_(alpha), b_(static_cast<double>(n - 1) * alpha) {
  if (n < 2) throw DimensionError("Dirichlet marginal needs n >= 2");
  if (!(alpha > 0.0)) throw ParameterError("Dirichlet parameter must be positive");
}

double DirichletMarginal::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return boost::math::ibeta(a_, b_, x);
}

// ---------------------------------------------------------------------------
// Tracy-Widom table

TracyWidomTable TracyWidomTable::parse(std::istream& in) {
  TracyWidomTable table;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      if (trim(line.substr(0, hash)).empty()) {
        const auto note = trim(line.substr(hash + 1));
        if (!note.empty()) {
          if (!table.provenance_.empty()) table.provenance_ += '\n';
          table.provenance_ += note;
        }
      }
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto start = line.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      const auto stop = std::min(line.find_first_of(" \t", start), line.size());
      tokens.push_back(line.substr(start, stop - start));
      pos = stop;
    }
    if (tokens.size() != 2) {
      throw FormatError("line " + std::to_string(line_no) + ": expected 2 columns, found " +
                        std::to_string(tokens.size()));
    }
    const double s = parse_number(tokens[0], line_no);
    const double f = parse_number(tokens[1], line_no);
    if (f < 0.0 || f > 1.0) {
      throw FormatError("line " + std::to_string(line_no) + ": cdf outside [0, 1]");
    }
    if (!table.grid_.empty()) {
      if (s <= table.grid_.back().first) {
        throw FormatError("line " + std::to_string(line_no) + ": s is not strictly increasing");
      }
      if (f < table.grid_.back().second) {
        throw FormatError("line " + std::to_string(line_no) + ": cdf decreases");
      }
    }
    table.grid_.emplace_back(s, f);
  }
  if (table.grid_.size() < 2) throw FormatError("table needs at least two rows");
  if (table.grid_.front().first > -5.0 || table.grid_.back().first < 3.0) {
    throw FormatError("table must cover s in [-5, 3]");
  }
  if (table.grid_.front().second >= 1e-3 || table.grid_.back().second <= 0.999) {
    throw FormatError("table cdf must rise from below 0.001 to above 0.999");
  }
  return table;
}

TracyWidomTable TracyWidomTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open Tracy-Widom table " + path.string());
  return parse(in);
}

double TracyWidomTable::cdf(double s) const {
  if (s <= grid_.front().first) return s < grid_.front().first ? 0.0 : grid_.front().second;
  if (s >= grid_.back().first) return 1.0;
  const auto hi = std::upper_bound(grid_.begin(), grid_.end(), s,
                                   [](double v, const auto& row) { return v < row.first; });
  const auto lo = hi - 1;
  const double t = (s - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

double TracyWidomTable::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile level must lie in (0, 1)");
  const auto hi = std::lower_bound(grid_.begin(), grid_.end(), p,
                                   [](const auto& row, double v) { return row.second < v; });
  if (hi == grid_.begin()) return grid_.front().first;
  if (hi == grid_.end()) return grid_.back().first;
  const auto lo = hi - 1;
  if (hi->second == lo->second) return lo->first;
  const double t = (p - lo->second) / (hi->second - lo->second);
  return lo->first + t * (hi->first - lo->first);
}

double TracyWidomTable::mean() const {
  // E[X] = s_0 + int_{s_0}^{s_N} (1 - F) ds - int F ds below s_0 (negligible).
  double integral = 0.0;
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    const double h = grid_[i].first - grid_[i - 1].first;
    integral += 0.5 * h * ((1.0 - grid_[i].second) + (1.0 - grid_[i - 1].second));
  }
  return grid_.front().first + integral;
}

// ---------------------------------------------------------------------------
// Rescalings

double edge_rescale_density(double lambda_max, const EnsembleParams& p) {
  const double c = p.c();
  const double n = static_cast<double>(p.n);
  const double root = std::sqrt(c);
  const double centred = static_cast<double>(p.k) * lambda_max - (root + 1.0) * (root + 1.0);
  return std::pow(n, 2.0 / 3.0) * centred / edge_scale(c);
}

double edge_rescale_wishart(double lambda_max, const EnsembleParams& p) {
  const double c = p.c();
  const double n = static_cast<double>(p.n);
  const double root = std::sqrt(c);
  return (lambda_max - n * (root + 1.0) * (root + 1.0)) / (std::cbrt(n) * edge_scale(c));
}

double trace_clt_statistic(double trace, const EnsembleParams& p) {
  const double nk = static_cast<double>(p.n) * static_cast<double>(p.k);
  return (trace - nk) / std::sqrt(nk);
}

// ---------------------------------------------------------------------------
// Goodness of fit

double ks_distance(const EmpiricalMeasure& emp, const ReferenceLaw& law) {
  if (emp.atoms.empty()) throw UsageError("KS distance of an empty measure");
  const EmpiricalMeasure sorted = emp.sorted();
  const auto& atoms = sorted.atoms;
  double below = 0.0;
  double worst = 0.0;
  std::size_t i = 0;
  while (i < atoms.size()) {
    const double x = atoms[i].location;
    double at = below;
    while (i < atoms.size() && atoms[i].location == x) at += atoms[i++].weight;
    worst = std::max(worst, std::abs(below - law.cdf_left(x)));
    worst = std::max(worst, std::abs(std::min(at, 1.0) - law.cdf(x)));
    below = at;
  }
  return worst;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw UsageError("two-sample KS needs non-empty samples");
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double worst = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    worst = std::max(worst, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return worst;
}

std::vector<double> histogram(const EmpiricalMeasure& emp, std::span<const double> edges) {
  if (edges.size() < 2) throw UsageError("histogram needs at least two edges");
  if (!std::is_sorted(edges.begin(), edges.end()) ||
      std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw UsageError("histogram edges must be strictly increasing");
  }
  std::vector<double> mass(edges.size() - 1, 0.0);
  for (const auto& atom : emp.atoms) {
    const double x = atom.location;
    if (x < edges.front() || x > edges.back()) continue;
    auto it = std::upper_bound(edges.begin(), edges.end(), x);
    std::size_t bin = static_cast<std::size_t>(it - edges.begin());
    bin = bin == 0 ? 0 : bin - 1;
    if (bin >= mass.size()) bin = mass.size() - 1;
    mass[bin] += atom.weight;
  }
  return mass;
}

ChiSquareResult chi_square_test(std::span<const double> observed,
                                std::span<const double> probabilities,
                                double min_expected) {
  if (observed.size() != probabilities.size() || observed.empty()) {
    throw UsageError("chi-square needs matching non-empty bins");
  }
  double total = 0.0;
  for (double o : observed) total += o;
  std::vector<std::pair<double, double>> pooled;  // (observed, expected)
  std::pair<double, double> open{0.0, 0.0};
  for (std::size_t i = 0; i < observed.size(); ++i) {
    open.first += observed[i];
    open.second += probabilities[i] * total;
    if (open.second >= min_expected) {
      pooled.push_back(open);
      open = {0.0, 0.0};
    }
  }
  if (open.second > 0.0 || open.first > 0.0) {
    if (pooled.empty()) {
      pooled.push_back(open);
    } else {
      pooled.back().first += open.first;
      pooled.back().second += open.second;
    }
  }
  ChiSquareResult r;
  r.bins_used = pooled.size();
  for (const auto& [o, e] : pooled) {
    if (e > 0.0) r.statistic += (o - e) * (o - e) / e;
  }
  if (pooled.size() < 2) throw UsageError("chi-square needs at least two pooled bins");
  r.degrees_of_freedom = pooled.size() - 1;
  r.p_value = boost::math::gamma_q(0.5 * static_cast<double>(r.degrees_of_freedom),
                                   0.5 * r.statistic);
  return r;
}

}  // namespace rdm
