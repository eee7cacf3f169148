#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>

#include "rdm/error.hpp"
#include "rdm/kernels.hpp"

namespace rdm::kernels {
namespace {

constexpr int kAuto = -1;
std::atomic<int> g_forced{kAuto};

Isa detect() noexcept {
#if defined(RDM_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return Isa::Avx2;
  }
#endif
  return Isa::Scalar;
}

Isa initial() {
  if (const char* env = std::getenv("RDM_ISA")) {
    const auto parsed = parse_isa(env);
    if (!parsed) throw UsageError(std::string("RDM_ISA: unknown instruction set '") + env + "'");
    if (!isa_supported(*parsed)) {
      throw UsageError(std::string("RDM_ISA: '") + env + "' is not supported on this CPU");
    }
    return *parsed;
  }
  return detect();
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) noexcept {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  return std::nullopt;
}

bool isa_supported(Isa isa) noexcept {
  return isa == Isa::Scalar || detect() == isa;
}

Isa active_isa() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced != kAuto) return static_cast<Isa>(forced);
  static const Isa chosen = initial();
  return chosen;
}

void force_isa(std::optional<Isa> isa) {
  if (isa && !isa_supported(*isa)) {
    throw UsageError(std::string("instruction set '") + std::string(isa_name(*isa)) +
                     "' is not supported on this CPU");
  }
  g_forced.store(isa ? static_cast<int>(*isa) : kAuto, std::memory_order_relaxed);
}

void gram(std::span<const std::complex<double>> x, std::size_t rows,
          std::size_t cols, std::span<std::complex<double>> out) {
  if (x.size() != rows * cols || out.size() != rows * rows) {
    throw DimensionError("gram: buffer sizes do not match dimensions");
  }
#if defined(RDM_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::gram(x, rows, cols, out);
#endif
  scalar::gram(x, rows, cols, out);
}

double sum_abs2(std::span<const std::complex<double>> x) {
#if defined(RDM_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::sum_abs2(x);
#endif
  return scalar::sum_abs2(x);
}

void power_sums(std::span<const double> values, std::span<double> sums) {
#if defined(RDM_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::power_sums(values, sums);
#endif
  scalar::power_sums(values, sums);
}

}  // namespace rdm::kernels
