#pragma once

#include <functional>

namespace nlcs {

struct QuadratureResult {
  double value = 0.0;
  bool converged = false;
  int panels = 0;  // composite panel count at the final refinement
};

/// Composite 16-node Gauss-Legendre integration of f on [a, b], doubling
/// the panel count until two successive estimates agree to rel_tol.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol,
                                    int max_doublings = 14);

/// Integration of an exponentially decaying f on [0, inf): adaptive panels
/// on successive dyadic segments until a segment's contribution falls
/// below rel_tol/10 of the running total.
QuadratureResult integrate_exponential(const std::function<double(double)>& f,
                                       double rel_tol,
                                       double first_segment = 64.0,
                                       int max_segments = 8);

}  // namespace nlcs
