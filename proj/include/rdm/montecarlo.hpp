#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "rdm/rng.hpp"

namespace rdm {

/// Evaluates draw(RngStream(seed, i)) for i in [0, count) on `workers`
/// threads. Each draw owns the stream keyed by its index and writes its own
/// slot, so the returned vector is independent of the worker count.
template <class Draw>
auto map_draws(std::uint64_t seed, std::size_t count, std::size_t workers, Draw&& draw) {
  using Result = decltype(draw(std::declval<RngStream&>()));
  std::vector<Result> out(count);
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        RngStream rng(seed, i);
        out[i] = draw(rng);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// Mean and standard error of a sample, accumulated in index order.
struct SampleSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double std_error = 0.0;

  double z_score(double expected) const {
    return std_error > 0.0 ? (mean - expected) / std_error
                           : (mean == expected ? 0.0 : INFINITY);
  }
};

template <class Range>
SampleSummary summarize(const Range& values) {
  SampleSummary s;
  for (double v : values) {
    ++s.count;
    const double delta = v - s.mean;
    s.mean += delta / static_cast<double>(s.count);
    s.variance += delta * (v - s.mean);
  }
  if (s.count > 1) {
    s.variance /= static_cast<double>(s.count - 1);
    s.std_error = std::sqrt(s.variance / static_cast<double>(s.count));
  } else {
    s.variance = 0.0;
  }
  return s;
}

/// Sample Pearson correlation.
double correlation(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace rdm
