#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rdm/matrix.hpp"
#include "rdm/spectra.hpp"

namespace rdm {

/// One-dimensional reference distribution for goodness-of-fit checks.
class ReferenceLaw {
 public:
  virtual ~ReferenceLaw() = default;
  /// P(X <= x)
  virtual double cdf(double x) const = 0;
  /// P(X < x); differs from cdf only at atoms.
  virtual double cdf_left(double x) const { return cdf(x); }
};

/// Marchenko-Pastur law mu_c: an atom of mass max(1-c, 0) at zero plus
/// sqrt((x-a)(b-x)) / (2 pi x) on [a, b], a = (sqrt c - 1)^2,
/// b = (sqrt c + 1)^2.
class MarchenkoPastur final : public ReferenceLaw {
 public:
  explicit MarchenkoPastur(double c);

  double c() const noexcept { return c_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double atom_weight() const noexcept { return atom_; }

  /// Density of the continuous part; 0 outside [a, b].
  double pdf(double x) const noexcept;
  /// CDF by quadrature after x = a + (b - a) sin^2(theta), which removes
  /// the square-root edges; absolute accuracy 1e-8 or better.
  double cdf(double x) const override;
  double cdf_left(double x) const override;
  /// int x^q d mu_c by quadrature (q >= 1; the atom contributes nothing).
  double moment(int q) const;
  /// Mass of the continuous part, min(1, c) in exact arithmetic.
  double continuous_mass() const;

 private:
  double continuous_cdf(double x) const;
  double c_, a_, b_, atom_;
};

class StandardNormal final : public ReferenceLaw {
 public:
  double cdf(double x) const override;
};

/// Law of one coordinate of a symmetric Dirichlet(alpha) vector on the
/// (n-1)-simplex: Beta(alpha, (n-1) alpha).
class DirichletMarginal final : public ReferenceLaw {
 public:
  DirichletMarginal(std::size_t n, double alpha);
  double cdf(double x) const override;

 private:
  double a_, b_;
};

/// Tabulated GUE Tracy-Widom CDF, linearly interpolated.
///
/// File format: one `s cdf` pair per line separated by whitespace; `#`
/// starts a comment that runs to the end of the line; blank lines are
/// ignored. Each number must parse completely as a decimal floating-point
/// literal. s must be strictly increasing, cdf non-decreasing within [0, 1],
/// the grid must cover [-5, 3], and the cdf must rise from below 0.001 to
/// above 0.999. Full-line comments are kept as provenance.
class TracyWidomTable final : public ReferenceLaw {
 public:
  static TracyWidomTable parse(std::istream& in);
  static TracyWidomTable load(const std::filesystem::path& path);

  /// 0 below the grid, 1 above it.
  double cdf(double s) const override;
  double quantile(double p) const;
  double median() const { return quantile(0.5); }
  /// Mean of the tabulated law (trapezoidal on the grid).
  double mean() const;

  const std::vector<std::pair<double, double>>& grid() const noexcept { return grid_; }
  const std::string& provenance() const noexcept { return provenance_; }

 private:
  std::vector<std::pair<double, double>> grid_;
  std::string provenance_;
};

struct GoFReport {
  std::string statistic;
  double value = 0.0;
  std::size_t sample_size = 0;
  double threshold = 0.0;
  bool pass = false;
};

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t degrees_of_freedom = 0;
  double p_value = 0.0;
  std::size_t bins_used = 0;
};

double mp_pdf(double x, const MarchenkoPastur& law);
double mp_cdf(double x, const MarchenkoPastur& law);
double mp_moment(int q, const MarchenkoPastur& law);

/// n^{2/3} [c n lambda_max - (sqrt c + 1)^2] / [(1 + sqrt c)(1 + 1/sqrt c)^{1/3}]
/// with c = k/n taken from `p`.
double edge_rescale_density(double lambda_max, const EnsembleParams& p);

/// [lambda_max - n (sqrt c + 1)^2] / [n^{1/3} (1 + sqrt c)(1 + 1/sqrt c)^{1/3}]
double edge_rescale_wishart(double lambda_max, const EnsembleParams& p);

/// (S - nk) / sqrt(nk)
double trace_clt_statistic(double trace, const EnsembleParams& p);

/// sup_x |F_emp(x) - F(x)|, evaluated exactly at both one-sided limits of
/// every atom.
double ks_distance(const EmpiricalMeasure& emp, const ReferenceLaw& law);

/// Two-sample Kolmogorov-Smirnov statistic.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Mass per bin [e_i, e_{i+1}); the last bin also holds its right edge.
/// Atoms outside the edges are ignored.
std::vector<double> histogram(const EmpiricalMeasure& emp, std::span<const double> edges);

/// Pearson chi-square of observed counts against bin probabilities.
/// Neighbouring bins are pooled left to right until every pooled bin
/// expects at least `min_expected` counts.
ChiSquareResult chi_square_test(std::span<const double> observed,
                                std::span<const double> probabilities,
                                double min_expected = 5.0);

}  // namespace rdm
