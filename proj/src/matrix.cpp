#include "rdm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rdm/error.hpp"

namespace rdm {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("matrix entry count " + std::to_string(data_.size()) +
                         " does not match " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

Complex ComplexMatrix::trace() const {
  if (!square()) throw ShapeError("trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::hermitian_defect() const {
  if (!square()) throw ShapeError("Hermitian check on a non-square matrix");
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product with mismatched inner dimension");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Complex ail = a(i, l);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += ail * b(l, j);
    }
  }
  return out;
}

EnsembleParams::EnsembleParams(std::size_t n_, std::size_t k_) : n(n_), k(k_) {
  if (n == 0 || k == 0) {
    throw DimensionError("ensemble dimensions must be positive (n=" +
                         std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
}

EnsembleParams EnsembleParams::swapped_if_needed() const noexcept {
  EnsembleParams p = *this;
  if (p.n > p.k) std::swap(p.n, p.k);
  return p;
}

}  // namespace rdm
