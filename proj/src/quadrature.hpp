#pragma once

// Adaptive Gauss-Kronrod quadrature shared by the exact and asymptotic
// modules.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdio>
#include <string>

#include "rdm/error.hpp"

namespace rdm::detail {

template <class F>
double integrate(F&& f, double a, double b, double abs_tol) {
  if (!(b > a)) return 0.0;
  double error = 0.0;
  double l1 = 0.0;
  // A relative target near machine epsilon is unreachable for exp/log
  // integrands and drives the bisection to its depth limit, so ask for
  // 1e-12 and let abs_tol decide acceptance.
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, 15, 1e-12, &error, &l1);
  if (!(error <= abs_tol) || !std::isfinite(value)) {
    char estimate[32];
    std::snprintf(estimate, sizeof estimate, "%.3g", error);
    throw NumericalError("quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                         "] did not reach tolerance (error estimate " +
                         estimate + ")");
  }
  return value;
}

}  // namespace rdm::detail
