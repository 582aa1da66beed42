#include "heatlab/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace heatlab {

QuadratureResult integrate_simpson(const std::function<double(double)>& f,
                                   double lo, double hi, double tol_rel,
                                   double floor_scale, int max_panels,
                                   int init_panels) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw InvalidQuery("quadrature range must be finite with lo <= hi");
  }
  if (!(tol_rel > 0.0) || floor_scale < 0.0) {
    throw InvalidQuery("quadrature tolerance must be positive");
  }
  if (init_panels < 1 || max_panels < init_panels) {
    throw InvalidQuery("quadrature panel counts are inconsistent");
  }
  if (lo == hi) return {0.0, 0.0, 0};

  const double len = hi - lo;
  // Trapezoid refinement; Simpson values come out of consecutive levels.
  double trap = 0.5 * len * (f(lo) + f(hi));
  int panels = 1;
  while (panels * 2 < init_panels) {
    const double h = len / panels;
    double odd = 0.0;
    for (int i = 0; i < panels; ++i) {
      odd += f(lo + (static_cast<double>(i) + 0.5) * h);
    }
    trap = 0.5 * trap + 0.5 * h * odd;
    panels *= 2;
  }

  double simpson_prev = 0.0;
  bool have_prev = false;
  double trap_prev = trap;
  for (;;) {
    const double h = len / panels;
    double odd = 0.0;
    for (int i = 0; i < panels; ++i) {
      odd += f(lo + (static_cast<double>(i) + 0.5) * h);
    }
    const double trap_next = 0.5 * trap_prev + 0.5 * h * odd;
    const int panels_next = panels * 2;
    const double simpson = (4.0 * trap_next - trap_prev) / 3.0;

    if (!std::isfinite(simpson)) {
      throw NumericFailure("quadrature produced a non-finite value");
    }
    if (have_prev) {
      const double est = std::abs(simpson - simpson_prev) / 15.0;
      if (est <= tol_rel * (std::abs(simpson) + floor_scale)) {
        return {simpson, est, panels_next};
      }
      if (panels_next >= max_panels) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "quadrature stalled at %d panels, error estimate %.3e",
                      panels_next, est);
        throw NumericFailure(buf);
      }
    }
    simpson_prev = simpson;
    have_prev = true;
    trap_prev = trap_next;
    panels = panels_next;
  }
}

}  // namespace heatlab
