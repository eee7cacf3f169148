#include "rdm/rng.hpp"

#include <cmath>
#include <numbers>

#include "rdm/error.hpp"

namespace rdm {
namespace {

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;  // golden ratio
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;  // sqrt(3) - 1

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) noexcept {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;

}  // namespace

PhiloxCounter philox4x64_10(PhiloxCounter ctr, PhiloxKey key) noexcept {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

RngStream::RngStream(std::uint64_t master_seed,
                     std::uint64_t stream_index) noexcept
    : key_{master_seed, stream_index} {}

std::uint64_t RngStream::next_u64() noexcept {
  if (used_ == 4) {
    block_ = philox4x64_10(counter_, key_);
    // 256-bit increment; the high words only move after 2^64 blocks.
    for (auto& word : counter_) {
      if (++word != 0) break;
    }
    used_ = 0;
  }
  return block_[used_++];
}

double RngStream::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * kTwoPow53Inv;
}

double RngStream::uniform_open_low() noexcept {
  return static_cast<double>((next_u64() >> 11) + 1) * kTwoPow53Inv;
}

std::complex<double> RngStream::complex_normal() noexcept {
  // |z|^2 = -log(u1) is Exp(1) and the phase is uniform.
  const double radius = std::sqrt(-std::log(uniform_open_low()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

double RngStream::normal() noexcept {
  const double radius = std::sqrt(-2.0 * std::log(uniform_open_low()));
  return radius * std::cos(2.0 * std::numbers::pi * uniform());
}

double RngStream::gamma(double shape) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw ParameterError("gamma shape must be positive and finite");
  }
  if (shape < 1.0) {
    const double g = gamma(shape + 1.0);
    return g * std::pow(uniform_open_low(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open_low();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t a, std::uint64_t b) noexcept {
  return philox4x64_10({a, b, 0, 0}, {master_seed, ~std::uint64_t{0}})[0];
}

}  // namespace rdm
