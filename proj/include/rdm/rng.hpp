#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace rdm {

/// Philox4x64-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3", SC'11). Maps a 256-bit counter under a 128-bit key
/// to 256 bits of output.
using PhiloxCounter = std::array<std::uint64_t, 4>;
using PhiloxKey = std::array<std::uint64_t, 2>;
PhiloxCounter philox4x64_10(PhiloxCounter counter, PhiloxKey key) noexcept;

/// Reproducible random stream keyed by (master_seed, stream_index).
///
/// The pair is used verbatim as the Philox key and the counter starts at
/// zero, so every stream is a pure function of its two identifiers. Workers
/// never share a stream; the Monte Carlo drivers key streams by draw index,
/// which makes results independent of how draws are scheduled.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept;

  std::uint64_t master_seed() const noexcept { return key_[0]; }
  std::uint64_t stream_index() const noexcept { return key_[1]; }

  std::uint64_t next_u64() noexcept;

  /// 53-bit uniform on [0, 1).
  double uniform() noexcept;
  /// 53-bit uniform on (0, 1].
  double uniform_open_low() noexcept;

  /// Standard complex Gaussian N_C(0, 1): independent real and imaginary
  /// parts with variance 1/2. Consumes exactly two uniforms.
  std::complex<double> complex_normal() noexcept;

  /// Standard real Gaussian N(0, 1). Consumes exactly two uniforms.
  double normal() noexcept;

  /// Gamma(shape, 1) by Marsaglia-Tsang squeeze; shape < 1 uses the
  /// U^{1/shape} boost. Consumes a variable number of draws.
  double gamma(double shape);

 private:
  PhiloxKey key_;
  PhiloxCounter counter_{};
  PhiloxCounter block_{};
  unsigned used_ = 4;
};

/// Master seed for a sub-experiment labelled (a, b), e.g. one (n, k) point
/// of a sweep. Uses the Philox block under stream index 2^64 - 1, which
/// the draw streams never reach, so labelled experiments do not share
/// random numbers with each other or with the parent seed's draws.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace rdm
