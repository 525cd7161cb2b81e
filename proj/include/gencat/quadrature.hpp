#pragma once

#include <cstddef>
#include <functional>

namespace gencat {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double reltol = 1e-10;
  double abstol = 1e-300;
  std::size_t max_intervals = 4000;
};

/// Globally adaptive 15-point Gauss-Kronrod on [lo, hi]: the panel with the
/// largest error estimate is bisected until the summed estimate is below
/// max(abstol, reltol * integral of |f|). Throws NumericFailure (carrying the
/// achieved estimate in its message) when max_intervals is exhausted.
QuadratureResult integrate_gk15(const std::function<double(double)>& f, double lo, double hi,
                                const QuadratureOptions& options = {});

}  // namespace gencat
