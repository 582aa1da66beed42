#pragma once

#include <functional>

#include "heatlab/errors.hpp"

namespace heatlab {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

// Composite Simpson value on [lo, hi], panel count doubled until the
// Richardson estimate |S_2N - S_N| / 15 falls below
// tol_rel * (|S_2N| + floor_scale). Throws NumericFailure carrying the
// achieved estimate when max_panels is reached first. The integrand is
// evaluated once per node.
QuadratureResult integrate_simpson(const std::function<double(double)>& f,
                                   double lo, double hi, double tol_rel,
                                   double floor_scale = 0.0,
                                   int max_panels = 1 << 20,
                                   int init_panels = 64);

}  // namespace heatlab
