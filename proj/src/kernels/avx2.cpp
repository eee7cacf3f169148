// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <array>
#include <cmath>
#include <vector>

#include "rdm/kernels.hpp"

namespace rdm::kernels::avx2 {
namespace {

inline double reduce(__m256d v) noexcept {
  alignas(32) std::array<double, 4> a;
  _mm256_store_pd(a.data(), v);
  return (a[0] + a[1]) + (a[2] + a[3]);
}

inline double reduce_imag(__m256d v) noexcept {
  alignas(32) std::array<double, 4> a;
  _mm256_store_pd(a.data(), v);
  return (a[1] - a[0]) + (a[3] - a[2]);
}

// Finishes one Gram entry from its lane accumulators, folding in the odd
// trailing column.
inline std::complex<double> finish(__m256d direct, __m256d swapped,
                                   const double* xi, const double* xj,
                                   std::size_t cols) noexcept {
  double re = reduce(direct);
  double im = reduce_imag(swapped);
  if (cols % 2 != 0) {
    const double* a = xi + 2 * (cols - 1);
    const double* b = xj + 2 * (cols - 1);
    re = std::fma(a[0], b[0], re);
    re = std::fma(a[1], b[1], re);
    im = std::fma(a[1], b[0], im);
    im = std::fma(-a[0], b[1], im);
  }
  return {re, im};
}

inline void store(std::span<std::complex<double>> out, std::size_t rows,
                  std::size_t i, std::size_t j, std::complex<double> v) noexcept {
  if (i == j) v.imag(0.0);
  out[i * rows + j] = v;
  out[j * rows + i] = std::conj(v);
}

// 2x2 register tile: rows (i, i+1) against rows (j, j+1).
void tile2x2(const double* raw, std::size_t rows, std::size_t cols,
             std::size_t i, std::size_t j, std::span<std::complex<double>> out) {
  const double* a0 = raw + 2 * i * cols;
  const double* a1 = a0 + 2 * cols;
  const double* b0 = raw + 2 * j * cols;
  const double* b1 = b0 + 2 * cols;
  __m256d d00 = _mm256_setzero_pd(), s00 = _mm256_setzero_pd();
  __m256d d01 = _mm256_setzero_pd(), s01 = _mm256_setzero_pd();
  __m256d d10 = _mm256_setzero_pd(), s10 = _mm256_setzero_pd();
  __m256d d11 = _mm256_setzero_pd(), s11 = _mm256_setzero_pd();
  const std::size_t pairs = cols / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const __m256d x0 = _mm256_loadu_pd(a0 + 4 * p);
    const __m256d x1 = _mm256_loadu_pd(a1 + 4 * p);
    const __m256d y0 = _mm256_loadu_pd(b0 + 4 * p);
    const __m256d y1 = _mm256_loadu_pd(b1 + 4 * p);
    const __m256d y0s = _mm256_permute_pd(y0, 0b0101);
    const __m256d y1s = _mm256_permute_pd(y1, 0b0101);
    d00 = _mm256_fmadd_pd(x0, y0, d00);
    s00 = _mm256_fmadd_pd(x0, y0s, s00);
    d01 = _mm256_fmadd_pd(x0, y1, d01);
    s01 = _mm256_fmadd_pd(x0, y1s, s01);
    d10 = _mm256_fmadd_pd(x1, y0, d10);
    s10 = _mm256_fmadd_pd(x1, y0s, s10);
    d11 = _mm256_fmadd_pd(x1, y1, d11);
    s11 = _mm256_fmadd_pd(x1, y1s, s11);
  }
  // On the diagonal tile (i == j) the (i, j+1) entry lies above the
  // diagonal; it is skipped so that every stored entry is computed as
  // row_i . conj(row_j) with i >= j, as in the scalar reference.
  store(out, rows, i, j, finish(d00, s00, a0, b0, cols));
  if (i != j) store(out, rows, i, j + 1, finish(d01, s01, a0, b1, cols));
  store(out, rows, i + 1, j, finish(d10, s10, a1, b0, cols));
  store(out, rows, i + 1, j + 1, finish(d11, s11, a1, b1, cols));
}

// 1x1 fallback for the last row when `rows` is odd.
void tile1x1(const double* raw, std::size_t rows, std::size_t cols,
             std::size_t i, std::size_t j, std::span<std::complex<double>> out) {
  const double* a = raw + 2 * i * cols;
  const double* b = raw + 2 * j * cols;
  __m256d d = _mm256_setzero_pd(), s = _mm256_setzero_pd();
  const std::size_t pairs = cols / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const __m256d x = _mm256_loadu_pd(a + 4 * p);
    const __m256d y = _mm256_loadu_pd(b + 4 * p);
    d = _mm256_fmadd_pd(x, y, d);
    s = _mm256_fmadd_pd(x, _mm256_permute_pd(y, 0b0101), s);
  }
  store(out, rows, i, j, finish(d, s, a, b, cols));
}

}  // namespace

void gram(std::span<const std::complex<double>> x, std::size_t rows,
          std::size_t cols, std::span<std::complex<double>> out) {
  const double* raw = reinterpret_cast<const double*>(x.data());
  const std::size_t even_rows = rows - rows % 2;
  for (std::size_t i = 0; i < even_rows; i += 2) {
    for (std::size_t j = 0; j <= i; j += 2) tile2x2(raw, rows, cols, i, j, out);
  }
  if (rows % 2 != 0) {
    const std::size_t last = rows - 1;
    for (std::size_t j = 0; j <= last; ++j) tile1x1(raw, rows, cols, last, j, out);
  }
}

double sum_abs2(std::span<const std::complex<double>> x) {
  const double* d = reinterpret_cast<const double*>(x.data());
  const std::size_t count = 2 * x.size();
  const std::size_t body = count - count % 4;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d v = _mm256_loadu_pd(d + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = reduce(acc);
  for (std::size_t i = body; i < count; ++i) s = std::fma(d[i], d[i], s);
  return s;
}

void power_sums(std::span<const double> values, std::span<double> sums) {
  const std::size_t q_max = sums.size();
  const std::size_t body = values.size() - values.size() % 4;
  std::vector<double> acc(4 * q_max, 0.0);
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d v = _mm256_loadu_pd(values.data() + i);
    __m256d p = v;
    for (std::size_t q = 0; q < q_max; ++q) {
      double* slot = acc.data() + 4 * q;
      _mm256_storeu_pd(slot, _mm256_add_pd(_mm256_loadu_pd(slot), p));
      p = _mm256_mul_pd(p, v);
    }
  }
  for (std::size_t q = 0; q < q_max; ++q) {
    sums[q] = reduce(_mm256_loadu_pd(acc.data() + 4 * q));
  }
  for (std::size_t i = body; i < values.size(); ++i) {
    double p = values[i];
    for (std::size_t q = 0; q < q_max; ++q) {
      sums[q] += p;
      p *= values[i];
    }
  }
}

}  // namespace rdm::kernels::avx2
