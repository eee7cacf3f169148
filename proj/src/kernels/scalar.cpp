#include <array>
#include <cmath>
#include <vector>

#include "rdm/kernels.hpp"

namespace rdm::kernels::scalar {
namespace {

using Lanes = std::array<double, 4>;

inline double reduce(const Lanes& a) noexcept {
  return (a[0] + a[1]) + (a[2] + a[3]);
}

// One output of the Gram product; `xi` and `xj` are rows as raw doubles
// (re, im, re, im, ...), `cols` complex entries each.
std::complex<double> dot_conj(const double* xi, const double* xj,
                              std::size_t cols) noexcept {
  Lanes acc_direct{};
  Lanes acc_swapped{};
  const std::size_t pairs = cols / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const double* a = xi + 4 * p;
    const double* b = xj + 4 * p;
    const Lanes b_swapped{b[1], b[0], b[3], b[2]};
    for (int lane = 0; lane < 4; ++lane) {
      acc_direct[lane] = std::fma(a[lane], b[lane], acc_direct[lane]);
      acc_swapped[lane] = std::fma(a[lane], b_swapped[lane], acc_swapped[lane]);
    }
  }
  double re = reduce(acc_direct);
  double im = (acc_swapped[1] - acc_swapped[0]) + (acc_swapped[3] - acc_swapped[2]);
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

}  // namespace

void gram(std::span<const std::complex<double>> x, std::size_t rows,
          std::size_t cols, std::span<std::complex<double>> out) {
  const double* raw = reinterpret_cast<const double*>(x.data());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      std::complex<double> v = dot_conj(raw + 2 * i * cols, raw + 2 * j * cols, cols);
      if (i == j) v.imag(0.0);
      out[i * rows + j] = v;
      out[j * rows + i] = std::conj(v);
    }
  }
}

double sum_abs2(std::span<const std::complex<double>> x) {
  const double* d = reinterpret_cast<const double*>(x.data());
  const std::size_t count = 2 * x.size();
  const std::size_t body = count - count % 4;
  Lanes acc{};
  for (std::size_t i = 0; i < body; i += 4) {
    for (int lane = 0; lane < 4; ++lane) {
      acc[lane] = std::fma(d[i + lane], d[i + lane], acc[lane]);
    }
  }
  double s = reduce(acc);
  for (std::size_t i = body; i < count; ++i) s = std::fma(d[i], d[i], s);
  return s;
}

void power_sums(std::span<const double> values, std::span<double> sums) {
  const std::size_t q_max = sums.size();
  const std::size_t body = values.size() - values.size() % 4;
  std::vector<Lanes> acc(q_max, Lanes{});
  for (std::size_t i = 0; i < body; i += 4) {
    Lanes v{values[i], values[i + 1], values[i + 2], values[i + 3]};
    Lanes p = v;
    for (std::size_t q = 0; q < q_max; ++q) {
      for (int lane = 0; lane < 4; ++lane) {
        acc[q][lane] += p[lane];
        p[lane] *= v[lane];
      }
    }
  }
  for (std::size_t q = 0; q < q_max; ++q) sums[q] = reduce(acc[q]);
  for (std::size_t i = body; i < values.size(); ++i) {
    double p = values[i];
    for (std::size_t q = 0; q < q_max; ++q) {
      sums[q] += p;
      p *= values[i];
    }
  }
}

}  // namespace rdm::kernels::scalar
