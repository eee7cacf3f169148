#pragma once

#include <optional>
#include <vector>

#include "rdm/matrix.hpp"
#include "rdm/sampling.hpp"

namespace rdm {

enum class SpectrumSource { Wishart, Density };
enum class Rescale { None, WishartBulk, DensityBulk };

struct SpectrumOrigin {
  SpectrumSource source;
  EnsembleParams params;
};

/// Real eigenvalues in ascending order plus where they came from.
struct Spectrum {
  std::vector<double> values;
  std::optional<SpectrumOrigin> origin;
  Rescale rescale = Rescale::None;
};

struct Atom {
  double location;
  double weight;
};

/// Finite weighted point measure; weights sum to one.
struct EmpiricalMeasure {
  std::vector<Atom> atoms;

  static EmpiricalMeasure uniform(std::span<const double> locations);
  double total_weight() const noexcept;
  /// Atoms sorted by location (stable).
  EmpiricalMeasure sorted() const;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column j belongs to values[j]
};

/// Eigenvalues of a Hermitian matrix, ascending. The input must be
/// Hermitian within 1e-10 * max(1, ||M||_F) (ShapeError otherwise).
Spectrum eigenvalues_hermitian(const ComplexMatrix& m);

/// Eigenvalues and eigenvectors; M = V diag(values) V^*.
EigenDecomposition eigen_decompose(const ComplexMatrix& m);

Spectrum wishart_spectrum(const WishartSample& w);

/// Spectrum of a density matrix. When the generating parameters have
/// n > k the n - k structural zeros (|lambda| <= 1e-10) are set to 0.
Spectrum density_spectrum(const DensityMatrix& rho);

/// Atoms of weight 1/n at the rescaled eigenvalues: lambda / n for
/// WishartBulk, c n lambda = k lambda for DensityBulk.
EmpiricalMeasure empirical_measure(const Spectrum& s, Rescale rescale);

double largest_eigenvalue(const Spectrum& s);

/// -sum lambda log lambda (natural log, 0 log 0 = 0). Values in
/// [-1e-10, 0) are clamped to zero; anything below throws
/// InvalidSpectrumError.
double von_neumann_entropy(const Spectrum& s);

/// Index of the largest value; ties resolve to the largest index.
std::size_t argmax(std::span<const double> values);

}  // namespace rdm
