#pragma once

#include <cstddef>
#include <vector>

#include "rdm/matrix.hpp"
#include "rdm/rng.hpp"

namespace rdm {

/// W = X X^* together with its generating parameters and its trace.
struct WishartSample {
  ComplexMatrix matrix;
  EnsembleParams params;
  /// Sum of the diagonal of `matrix`, accumulated in index order.
  double trace = 0.0;
};

/// Hermitian, positive semidefinite, unit-trace matrix drawn from mu_{n,k}.
struct DensityMatrix {
  ComplexMatrix matrix;
  EnsembleParams params;
};

/// Point of the probability simplex.
struct SimplexVector {
  std::vector<double> coords;
};

/// n x k matrix of i.i.d. N_C(0,1) entries, filled row by row.
ComplexMatrix sample_ginibre(std::size_t n, std::size_t k, RngStream& rng);

/// W = X X^*. The Gram kernel mirrors the lower triangle, so W is exactly
/// Hermitian and its diagonal exactly real.
WishartSample wishart_from_factor(const ComplexMatrix& x);

WishartSample sample_wishart(std::size_t n, std::size_t k, RngStream& rng);

/// rho = W / tr W. Throws DegenerateError when the trace is not positive.
DensityMatrix induced_density(const WishartSample& w);

/// One draw from the induced measure mu_{n,k}.
DensityMatrix sample_density_matrix(std::size_t n, std::size_t k, RngStream& rng);

/// Dirichlet(alpha, ..., alpha) on the (n-1)-simplex by normalising n
/// independent Gamma(alpha, 1) draws.
SimplexVector sample_dirichlet(std::size_t n, double alpha, RngStream& rng);

/// Throws if `rho` violates the density-matrix invariants (unit trace and
/// Hermitian within 1e-12). Positivity is checked on the spectrum.
void check_density_invariants(const DensityMatrix& rho);

}  // namespace rdm
