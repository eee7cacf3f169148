#pragma once

// Data-parallel inner loops with a scalar reference and SIMD variants.
//
// Every variant follows the same arithmetic schedule: four-lane fused
// multiply-add accumulation, lanes reduced as (l0 + l1) + (l2 + l3), then
// the remainder folded in sequentially. The scalar reference emulates the
// lanes with std::fma, so all variants return bit-identical results and the
// selected instruction set never changes a Monte Carlo output.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace rdm::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;

/// True when the running CPU can execute `isa`.
bool isa_supported(Isa isa) noexcept;

/// Best supported instruction set, unless overridden by `force_isa` or the
/// RDM_ISA environment variable ("scalar" or "avx2").
Isa active_isa();

/// Pin the dispatch target; std::nullopt restores automatic selection.
/// Throws UsageError for an instruction set the CPU lacks.
void force_isa(std::optional<Isa> isa);

/// Lower triangle of X X^* for row-major interleaved X (rows x cols),
/// mirrored into the upper triangle as the conjugate. `out` is rows x rows,
/// row-major; diagonal imaginary parts are exactly zero.
void gram(std::span<const std::complex<double>> x, std::size_t rows,
          std::size_t cols, std::span<std::complex<double>> out);

/// sum_i |x_i|^2.
double sum_abs2(std::span<const std::complex<double>> x);

/// sums[q-1] = sum_i values[i]^q for q = 1..sums.size(); powers are formed
/// by repeated multiplication.
void power_sums(std::span<const double> values, std::span<double> sums);

namespace scalar {
void gram(std::span<const std::complex<double>> x, std::size_t rows,
          std::size_t cols, std::span<std::complex<double>> out);
double sum_abs2(std::span<const std::complex<double>> x);
void power_sums(std::span<const double> values, std::span<double> sums);
}  // namespace scalar

#if defined(RDM_HAVE_AVX2)
namespace avx2 {
void gram(std::span<const std::complex<double>> x, std::size_t rows,
          std::size_t cols, std::span<std::complex<double>> out);
double sum_abs2(std::span<const std::complex<double>> x);
void power_sums(std::span<const double> values, std::span<double> sums);
}  // namespace avx2
#endif

}  // namespace rdm::kernels
