#pragma once

#include <optional>

#include "heatlab/osgood.hpp"
#include "heatlab/source.hpp"

namespace heatlab {

struct OdeOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  long max_steps = 10'000'000;
  double dt_init = 1e-6;
  double blowup_threshold = 1e300;
};

struct OdeResult {
  bool blew_up = false;
  double t_blowup = 0.0;  // meaningful only when blew_up
  long steps = 0;
  double x_final = 0.0;       // +inf when past double range
  TowerReal x_final_tower{};  // exact-scale representation of the state
  // Populated for the piecewise plateau/ramp source: segment holding the
  // final state (ids as in bad_f_segment) and the time the trajectory
  // spent inside it.
  std::optional<int> final_segment;
  std::optional<double> time_in_final_segment;
};

// Integrates dx/dt = f(x) from x(0) = x0 to time T with an adaptive
// embedded 4th/5th-order scheme. Unbounded growth is reported through
// blew_up (threshold crossing or step underflow), never as an exception.
// For the plateau/ramp source the integrator hands over to exact
// piecewise traversal once the state is on the plateau structure
// (x >= phi_2), where double arithmetic can no longer represent f.
OdeResult ode_integrate(const SourceFunction& f, double x0, double T,
                        const OdeOptions& opts = {});

}  // namespace heatlab
