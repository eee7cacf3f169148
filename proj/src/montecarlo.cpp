#include "rdm/montecarlo.hpp"

#include "rdm/error.hpp"

namespace rdm {

double correlation(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw UsageError("correlation needs two samples of equal size >= 2");
  }
  const SampleSummary sx = summarize(x);
  const SampleSummary sy = summarize(y);
  double cov = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) cov += (x[i] - sx.mean) * (y[i] - sy.mean);
  cov /= static_cast<double>(x.size() - 1);
  return cov / std::sqrt(sx.variance * sy.variance);
}

}  // namespace rdm
