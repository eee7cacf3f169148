#include "rdm/sampling.hpp"

#include <cmath>
#include <string>

#include "rdm/error.hpp"
#include "rdm/kernels.hpp"

namespace rdm {

ComplexMatrix sample_ginibre(std::size_t n, std::size_t k, RngStream& rng) {
  if (n == 0 || k == 0) {
    throw DimensionError("Ginibre matrix dimensions must be positive");
  }
  ComplexMatrix x(n, k);
  for (auto& z : x.data()) z = rng.complex_normal();
  return x;
}

WishartSample wishart_from_factor(const ComplexMatrix& x) {
  if (x.rows() == 0 || x.cols() == 0) throw DimensionError("empty Wishart factor");
  if (!x.all_finite()) throw ParameterError("Wishart factor has non-finite entries");
  const std::size_t n = x.rows();
  WishartSample w{ComplexMatrix(n, n), EnsembleParams(n, x.cols()), 0.0};
  kernels::gram(x.data(), n, x.cols(), w.matrix.data());
  for (std::size_t i = 0; i < n; ++i) w.trace += w.matrix(i, i).real();
  return w;
}

WishartSample sample_wishart(std::size_t n, std::size_t k, RngStream& rng) {
  return wishart_from_factor(sample_ginibre(n, k, rng));
}

DensityMatrix induced_density(const WishartSample& w) {
  if (!(w.trace > 0.0) || !std::isfinite(w.trace)) {
    throw DegenerateError("Wishart trace is not positive; cannot normalise");
  }
  const std::size_t n = w.matrix.rows();
  DensityMatrix rho{w.matrix, w.params};
  if (n == 1) {
    rho.matrix(0, 0) = 1.0;
    return rho;
  }
  for (auto& z : rho.matrix.data()) z /= w.trace;
#ifndef NDEBUG
  check_density_invariants(rho);
#endif
  return rho;
}

DensityMatrix sample_density_matrix(std::size_t n, std::size_t k, RngStream& rng) {
  return induced_density(sample_wishart(n, k, rng));
}

SimplexVector sample_dirichlet(std::size_t n, double alpha, RngStream& rng) {
  if (n == 0) throw DimensionError("Dirichlet dimension must be positive");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ParameterError("Dirichlet parameter must be positive, got " +
                         std::to_string(alpha));
  }
  SimplexVector v{std::vector<double>(n)};
  double total = 0.0;
  for (auto& g : v.coords) {
    g = rng.gamma(alpha);
    total += g;
  }
  if (!(total > 0.0)) throw DegenerateError("all Gamma draws underflowed to zero");
  for (auto& g : v.coords) g /= total;
  return v;
}

void check_density_invariants(const DensityMatrix& rho) {
  const Complex tr = rho.matrix.trace();
  if (std::abs(tr.real() - 1.0) > 1e-12 || std::abs(tr.imag()) > 1e-12) {
    throw DegenerateError("density matrix trace deviates from one");
  }
  if (rho.matrix.hermitian_defect() > 1e-12) {
    throw ShapeError("density matrix is not Hermitian");
  }
}

}  // namespace rdm
