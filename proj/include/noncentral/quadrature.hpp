#pragma once

#include <functional>
#include <vector>

#include "noncentral/errors.hpp"

namespace noncentral {

struct QuadratureResult {
  double value;
  double abs_error;  ///< estimated
  long evals;
};

/// Adaptive Gauss-Kronrod (G7/K15) on [a, b]. Splits the worst interval
/// until the summed error estimate meets rel_tol * |value| (or abs_floor),
/// throwing ConvergenceError once max_evals integrand evaluations are spent.
/// Deterministic: subdivision order depends only on the integrand values.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol = 1e-9, long max_evals = 500000,
                                    double abs_floor = 0.0);

/// Same, seeded with a user-chosen partition (useful when the integrand has
/// widely separated scales, e.g. exponential tails).
QuadratureResult integrate_adaptive_segmented(const std::function<double(double)>& f,
                                              const std::vector<double>& breakpoints,
                                              double rel_tol = 1e-9, long max_evals = 500000,
                                              double abs_floor = 0.0);

}  // namespace noncentral
