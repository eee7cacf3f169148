#include "rdm/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "rdm/error.hpp"

extern "C" void openblas_set_num_threads(int);

namespace rdm {
namespace {

// Below this size the one-stage reduction is faster.
constexpr std::size_t kTwoStageThreshold = 96;

constexpr double kHermitianTolerance = 1e-10;
constexpr double kNullEigenvalue = 1e-10;

void pin_blas_threads() {
  static std::once_flag once;
  std::call_once(once, [] { openblas_set_num_threads(1); });
}

void require_hermitian(const ComplexMatrix& m) {
  if (!m.square() || m.rows() == 0) {
    throw ShapeError("eigensolve needs a non-empty square matrix, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.all_finite()) throw ShapeError("matrix has non-finite entries");
  const double scale = std::max(1.0, m.frobenius_norm());
  if (m.hermitian_defect() > kHermitianTolerance * scale) {
    throw ShapeError("matrix is not Hermitian within tolerance");
  }
}

std::vector<double> small_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() == 1) return {m(0, 0).real()};
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mid = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(m(1, 0)));
  return {mid - radius, mid + radius};
}

void check_info(lapack_int info, const char* routine) {
  if (info < 0) {
    throw UsageError(std::string(routine) + ": invalid argument " + std::to_string(-info));
  }
  if (info > 0) {
    throw NumericalError(std::string(routine) + " failed to converge (info=" +
                         std::to_string(info) + ")");
  }
}

}  // namespace

EmpiricalMeasure EmpiricalMeasure::uniform(std::span<const double> locations) {
  EmpiricalMeasure m;
  m.atoms.reserve(locations.size());
  const double w = 1.0 / static_cast<double>(locations.size());
  for (double x : locations) m.atoms.push_back({x, w});
  return m;
}

double EmpiricalMeasure::total_weight() const noexcept {
  double total = 0.0;
  for (const auto& a : atoms) total += a.weight;
  return total;
}

EmpiricalMeasure EmpiricalMeasure::sorted() const {
  EmpiricalMeasure out = *this;
  std::stable_sort(out.atoms.begin(), out.atoms.end(),
                   [](const Atom& x, const Atom& y) { return x.location < y.location; });
  return out;
}

Spectrum eigenvalues_hermitian(const ComplexMatrix& m) {
  require_hermitian(m);
  const std::size_t n = m.rows();
  Spectrum s;
  if (n <= 2) {
    s.values = small_eigenvalues(m);
    return s;
  }
  pin_blas_threads();
  // Row-major storage read as column-major is conj(M), which has the same
  // (real) eigenvalues, so no transpose is needed.
  std::vector<Complex> work(m.data().begin(), m.data().end());
  s.values.resize(n);
  const auto ln = static_cast<lapack_int>(n);
  if (n >= kTwoStageThreshold) {
    check_info(LAPACKE_zheevd_2stage(LAPACK_COL_MAJOR, 'N', 'L', ln, work.data(), ln,
                                     s.values.data()),
               "zheevd_2stage");
  } else {
    check_info(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', ln, work.data(), ln,
                              s.values.data()),
               "zheevd");
  }
  return s;
}

EigenDecomposition eigen_decompose(const ComplexMatrix& m) {
  require_hermitian(m);
  pin_blas_threads();
  const std::size_t n = m.rows();
  // zheevr rather than zheevd: the divide-and-conquer vector path returns
  // non-orthogonal vectors with some OpenBLAS 0.3.20 kernels (n >= ~400).
  std::vector<Complex> work(m.data().begin(), m.data().end());
  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  std::vector<lapack_int> support(2 * n);
  lapack_int found = 0;
  const auto ln = static_cast<lapack_int>(n);
  check_info(LAPACKE_zheevr(LAPACK_ROW_MAJOR, 'V', 'A', 'L', ln, work.data(), ln, 0.0, 0.0, 0,
                            0, 0.0, &found, out.values.data(), out.vectors.data().data(), ln,
                            support.data()),
             "zheevr");
  if (found != ln) throw NumericalError("zheevr returned an incomplete spectrum");
  return out;
}

Spectrum wishart_spectrum(const WishartSample& w) {
  Spectrum s = eigenvalues_hermitian(w.matrix);
  s.origin = SpectrumOrigin{SpectrumSource::Wishart, w.params};
  return s;
}

Spectrum density_spectrum(const DensityMatrix& rho) {
  Spectrum s = eigenvalues_hermitian(rho.matrix);
  s.origin = SpectrumOrigin{SpectrumSource::Density, rho.params};
  const auto [n, k] = std::pair{rho.params.n, rho.params.k};
  if (n > k) {
    for (std::size_t i = 0; i < n - k; ++i) {
      if (std::abs(s.values[i]) > kNullEigenvalue) {
        throw NumericalError("expected " + std::to_string(n - k) +
                             " null eigenvalues, found |lambda| = " +
                             std::to_string(s.values[i]));
      }
      s.values[i] = 0.0;
    }
  }
  return s;
}

EmpiricalMeasure empirical_measure(const Spectrum& s, Rescale rescale) {
  if (s.values.empty()) throw UsageError("empirical measure of an empty spectrum");
  if (s.rescale != Rescale::None && rescale != Rescale::None) {
    throw UsageError("spectrum is already rescaled");
  }
  std::vector<double> locations = s.values;
  if (rescale != Rescale::None) {
    if (!s.origin) throw UsageError("rescaling needs the spectrum's ensemble");
    const auto expected = rescale == Rescale::WishartBulk ? SpectrumSource::Wishart
                                                          : SpectrumSource::Density;
    if (s.origin->source != expected) {
      throw UsageError("rescale does not match the spectrum's source ensemble");
    }
    const double factor = rescale == Rescale::WishartBulk
                              ? 1.0 / static_cast<double>(s.origin->params.n)
                              : static_cast<double>(s.origin->params.k);
    for (auto& x : locations) x *= factor;
  }
  return EmpiricalMeasure::uniform(locations);
}

double largest_eigenvalue(const Spectrum& s) {
  if (s.values.empty()) throw UsageError("largest eigenvalue of an empty spectrum");
  return s.values[argmax(s.values)];
}

std::size_t argmax(std::span<const double> values) {
  if (values.empty()) throw UsageError("argmax of an empty range");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] >= values[best]) best = i;
  }
  return best;
}

double von_neumann_entropy(const Spectrum& s) {
  double h = 0.0;
  for (double x : s.values) {
    if (x < -kNullEigenvalue) {
      throw InvalidSpectrumError("negative eigenvalue " + std::to_string(x) +
                                 " in a density spectrum");
    }
    if (x > 0.0) h -= x * std::log(x);
  }
  // A pure state can carry an eigenvalue of 1 + ulp.
  return std::max(h, 0.0);
}

}  // namespace rdm
