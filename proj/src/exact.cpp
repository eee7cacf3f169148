#include "rdm/exact.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "quadrature.hpp"
#include "rdm/error.hpp"

namespace rdm {
namespace {

using Int = __int128;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kSimplexTolerance = 1e-12;
// Relative accuracy the explicit moment sum must retain after cancellation.
constexpr long double kMomentAccuracy = 1e-8L;
// Per-term relative error of the log-space evaluation in extended precision.
constexpr long double kTermError = 1e-17L;

void require_k_ge_n(const EnsembleParams& p, const char* what) {
  if (p.k < p.n) {
    throw DomainError(std::string(what) + " needs k >= n (got n=" + std::to_string(p.n) +
                      ", k=" + std::to_string(p.k) + "); swap n and k and pad with zeros");
  }
}

void require_q(int q) {
  if (q < 1) throw DomainError("moment order must be >= 1, got " + std::to_string(q));
}

double log_gamma(double x) { return boost::math::lgamma(x); }

// sum_{j=0}^{n-1} [log Gamma(n+1-j) + log Gamma(k-j)]
double log_selberg_product(const EnsembleParams& p) {
  double s = 0.0;
  for (std::size_t j = 0; j < p.n; ++j) {
    s += log_gamma(static_cast<double>(p.n + 1 - j)) + log_gamma(static_cast<double>(p.k - j));
  }
  return s;
}

// log |[a]_q| for integer a >= q; callers handle the zero case.
long double log_falling(long long a, int q) {
  long double s = 0.0L;
  for (int i = 0; i < q; ++i) s += std::log(static_cast<long double>(a - i));
  return s;
}

bool falling_is_zero(long long a, int q) { return a >= 0 && a - q + 1 <= 0; }

long double log_factorial(int m) {
  long double s = 0.0L;
  for (int i = 2; i <= m; ++i) s += std::log(static_cast<long double>(i));
  return s;
}

// 2 * sum_{i<j} log|x_i - x_j| plus (k-n) * sum log x_i; -inf when the
// density vanishes.
double log_vandermonde_power(std::span<const double> x, std::size_t power) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (power > 0) {
      if (x[i] == 0.0) return kNegInf;
      s += static_cast<double>(power) * std::log(x[i]);
    }
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double d = std::abs(x[i] - x[j]);
      if (d == 0.0) return kNegInf;
      s += 2.0 * std::log(d);
    }
  }
  return s;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw RangeError("Wishart moment exceeds 127-bit integer range");
  }
  return r;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw RangeError("Wishart moment exceeds 127-bit integer range");
  }
  return r;
}

Int falling_exact(long long a, int q) {
  Int r = 1;
  for (int i = 0; i < q; ++i) r = checked_mul(r, static_cast<Int>(a - i));
  return r;
}

Int factorial_exact(int m) {
  Int r = 1;
  for (int i = 2; i <= m; ++i) r = checked_mul(r, i);
  return r;
}

// q * E^W[tr W^q] as an exact integer.
Int wishart_moment_times_q(const EnsembleParams& p, int q) {
  const auto n = static_cast<long long>(p.n);
  const auto k = static_cast<long long>(p.k);
  Int total = 0;
  for (int j = 1; j <= q; ++j) {
    // [k+q-j]_q / (q-j)! and [n+q-j]_q / (j-1)! are both integers.
    const Int left = falling_exact(k + q - j, q) / factorial_exact(q - j);
    const Int right = falling_exact(n + q - j, q) / factorial_exact(j - 1);
    const Int term = checked_mul(left, right);
    total = checked_add(total, (j % 2 == 1) ? term : -term);
  }
  return total;
}

}  // namespace

double log_norm_constant(const EnsembleParams& p) {
  require_k_ge_n(p, "log_norm_constant");
  return log_gamma(static_cast<double>(p.n * p.k)) - log_selberg_product(p);
}

double log_wishart_norm_constant(const EnsembleParams& p) {
  require_k_ge_n(p, "log_wishart_norm_constant");
  return -log_selberg_product(p);
}

double log_density_eigs(const EnsembleParams& p, std::span<const double> lambda) {
  require_k_ge_n(p, "log_density_eigs");
  if (lambda.size() != p.n) {
    throw DimensionError("expected " + std::to_string(p.n) + " eigenvalues, got " +
                         std::to_string(lambda.size()));
  }
  double sum = 0.0;
  for (double x : lambda) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("eigenvalue outside [0, 1]");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    throw DomainError("eigenvalues do not lie on the simplex (sum = " +
                      std::to_string(sum) + ")");
  }
  const double body = log_vandermonde_power(lambda, p.k - p.n);
  if (body == kNegInf) return kNegInf;
  return log_norm_constant(p) + body;
}

double log_density_wishart_eigs(const EnsembleParams& p, std::span<const double> lambda) {
  require_k_ge_n(p, "log_density_wishart_eigs");
  if (lambda.size() != p.n) {
    throw DimensionError("expected " + std::to_string(p.n) + " eigenvalues, got " +
                         std::to_string(lambda.size()));
  }
  double sum = 0.0;
  for (double x : lambda) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("Wishart eigenvalue must be >= 0");
    sum += x;
  }
  const double body = log_vandermonde_power(lambda, p.k - p.n);
  if (body == kNegInf) return kNegInf;
  return log_wishart_norm_constant(p) - sum + body;
}

double eigenvalue_mass_n2(const EnsembleParams& p, double lo, double hi) {
  if (p.n != 2) throw DomainError("eigenvalue_mass_n2 needs n = 2");
  require_k_ge_n(p, "eigenvalue_mass_n2");
  lo = std::max(lo, 0.0);
  hi = std::min(hi, 1.0);
  const double log_c = log_norm_constant(p);
  const double power = static_cast<double>(p.k - p.n);
  // Phi(x) = C (x (1-x))^{k-2} (2x-1)^2
  auto density = [&](double x) {
    const double y = 1.0 - x;
    const double d = 2.0 * x - 1.0;
    if (d == 0.0) return 0.0;
    const double prod = x * y;
    if (power > 0.0 && prod <= 0.0) return 0.0;
    return std::exp(log_c + (power > 0.0 ? power * std::log(prod) : 0.0) +
                    2.0 * std::log(std::abs(d)));
  };
  return detail::integrate(density, lo, hi, 1e-10);
}

double moment_explicit(const EnsembleParams& p, int q) {
  require_q(q);
  const auto n = static_cast<long long>(p.n);
  const auto k = static_cast<long long>(p.k);
  std::vector<long double> log_mag;
  std::vector<int> sign;
  for (int j = 1; j <= q; ++j) {
    if (falling_is_zero(k + q - j, q) || falling_is_zero(n + q - j, q)) continue;
    log_mag.push_back(log_falling(k + q - j, q) + log_falling(n + q - j, q) -
                      log_factorial(q - j) - log_factorial(j - 1));
    sign.push_back(j % 2 == 1 ? 1 : -1);
  }
  long double top = log_mag.front();
  for (long double v : log_mag) top = std::max(top, v);

  // Neumaier-compensated signed sum of exp(log_mag - top).
  long double sum = 0.0L, comp = 0.0L, abs_sum = 0.0L;
  for (std::size_t i = 0; i < log_mag.size(); ++i) {
    const long double term = sign[i] * std::exp(log_mag[i] - top);
    abs_sum += std::abs(term);
    const long double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  sum += comp;
  if (!(sum > 0.0L) || abs_sum / sum * kTermError > kMomentAccuracy) {
    throw RangeError("explicit moment sum loses precision at q=" + std::to_string(q) +
                     " (n=" + std::to_string(p.n) + ", k=" + std::to_string(p.k) +
                     "); use the recurrence");
  }
  // Gamma(nk) / Gamma(nk+q) / q
  long double log_prefactor = -std::log(static_cast<long double>(q));
  for (int i = 0; i < q; ++i) log_prefactor -= std::log(static_cast<long double>(n * k + i));
  const long double value = sum * std::exp(top + log_prefactor);
  if (!std::isfinite(static_cast<double>(value))) {
    throw RangeError("explicit moment overflows at q=" + std::to_string(q));
  }
  return static_cast<double>(value);
}

double moment_recurrence(const EnsembleParams& p, int q) {
  if (q < 0) throw DomainError("moment order must be >= 0");
  const auto n = static_cast<long double>(p.n);
  const auto k = static_cast<long double>(p.k);
  const long double nk = n * k;
  long double prev = n;      // q = 0
  long double cur = 1.0L;    // q = 1
  if (q == 0) return static_cast<double>(prev);
  for (int m = 2; m <= q; ++m) {
    const long double lm = m;
    const long double a = (2 * lm - 1) * (n + k) / ((nk + lm - 1) * (lm + 1));
    const long double b = (lm - 2) * ((lm - 1) * (lm - 1) - (k - n) * (k - n)) /
                          ((nk + lm - 1) * (nk + lm - 2) * (lm + 1));
    const long double next = a * cur + b * prev;
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

double wishart_moment(const EnsembleParams& p, int q) {
  require_q(q);
  try {
    const Int total = wishart_moment_times_q(p, q);
    return static_cast<double>(static_cast<long double>(total / q));
  } catch (const RangeError&) {
    const double value = moment_recurrence(p, q) * moment_bridge_factor(p, q);
    if (!std::isfinite(value)) {
      throw RangeError("Wishart moment overflows double range at q=" + std::to_string(q));
    }
    return value;
  }
}

double moment_bridge_factor(const EnsembleParams& p, int q) {
  require_q(q);
  long double r = 1.0L;
  const auto nk = static_cast<long double>(p.n) * static_cast<long double>(p.k);
  for (int j = 0; j < q; ++j) r *= nk + j;
  return static_cast<double>(r);
}

double moment_from_wishart(const EnsembleParams& p, int q) {
  require_q(q);
  const Int numerator = wishart_moment_times_q(p, q) / q;
  Int denominator = 1;
  const auto nk = static_cast<Int>(p.n) * static_cast<Int>(p.k);
  for (int j = 0; j < q; ++j) denominator = checked_mul(denominator, nk + j);
  return static_cast<double>(static_cast<long double>(numerator) /
                             static_cast<long double>(denominator));
}

MomentTable moment_table(const EnsembleParams& p, int q_max, MomentMethod method) {
  if (q_max < 1) throw DomainError("q_max must be >= 1");
  MomentTable table{p, method, {}};
  for (int q = 1; q <= q_max; ++q) {
    switch (method) {
      case MomentMethod::Explicit: table.values[q] = moment_explicit(p, q); break;
      case MomentMethod::Recurrence: table.values[q] = moment_recurrence(p, q); break;
      case MomentMethod::WishartBridge: table.values[q] = moment_from_wishart(p, q); break;
      case MomentMethod::MonteCarlo:
        throw UsageError("Monte Carlo moment tables come from the simulation driver");
    }
  }
  return table;
}

double page_entropy(const EnsembleParams& p) {
  require_k_ge_n(p, "page_entropy");
  // Smallest terms first.
  long double h = 0.0L;
  for (std::size_t i = p.n * p.k; i > p.k; --i) h += 1.0L / static_cast<long double>(i);
  return static_cast<double>(h - static_cast<long double>(p.n - 1) /
                                     (2.0L * static_cast<long double>(p.k)));
}

double dirichlet_mean_sq_distance(std::size_t n, double alpha) {
  if (n < 2) throw DimensionError("Dirichlet distance needs n >= 2");
  if (!(alpha > 0.0)) throw ParameterError("Dirichlet parameter must be positive");
  const double dn = static_cast<double>(n);
  return (alpha + 1.0) / (dn * alpha + 1.0) - 1.0 / dn;
}

}  // namespace rdm
