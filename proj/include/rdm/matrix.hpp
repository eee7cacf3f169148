#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace rdm {

using Complex = std::complex<double>;

/// Dense row-major matrix of complex doubles.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  bool all_finite() const noexcept;
  Complex trace() const;
  double frobenius_norm() const noexcept;
  /// max_{ij} |M_ij - conj(M_ji)|; requires a square matrix.
  double hermitian_defect() const;

  ComplexMatrix adjoint() const;
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// System dimension n and environment dimension k of the induced measure.
struct EnsembleParams {
  std::size_t n = 1;
  std::size_t k = 1;

  EnsembleParams() = default;
  EnsembleParams(std::size_t n_, std::size_t k_);

  double c() const noexcept {
    return static_cast<double>(k) / static_cast<double>(n);
  }
  /// (min, max) ordering used by the spectral formulas.
  EnsembleParams swapped_if_needed() const noexcept;

  bool operator==(const EnsembleParams&) const = default;
};

}  // namespace rdm
