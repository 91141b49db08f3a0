#pragma once

#include <functional>

namespace hypkonvex::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;  ///< estimated absolute error
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b], bisecting the interval with the
/// largest error until the total is below max(abs_tol, rel_tol |value|).
/// Throws ConvergenceError when max_intervals is exhausted.
Result gauss_kronrod(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-14,
                     double abs_tol = 0.0, int max_intervals = 20000);

}  // namespace hypkonvex::quad
