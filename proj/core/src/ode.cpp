#include "heatlab/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "heatlab/errors.hpp"

namespace heatlab {
namespace {

struct StepOutcome {
  bool accepted = false;
  bool finite = true;
  double x_new = 0.0;
  double err = 0.0;
  double scale = 0.0;
};

// One Dormand-Prince 5(4) trial step for the scalar autonomous ODE.
template <typename F>
StepOutcome dopri5_step(F&& f, double x, double dt, double rel_tol,
                        double abs_tol) {
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                   a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                   b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695,
                   e4 = 393.0 / 640, e5 = -92097.0 / 339200,
                   e6 = 187.0 / 2100, e7 = 1.0 / 40;

  StepOutcome out;
  const double k1 = f(x);
  const double k2 = f(x + dt * a21 * k1);
  const double k3 = f(x + dt * (a31 * k1 + a32 * k2));
  const double k4 = f(x + dt * (a41 * k1 + a42 * k2 + a43 * k3));
  const double k5 = f(x + dt * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
  const double k6 =
      f(x + dt * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
  const double x5 =
      x + dt * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
  const double k7 = f(x5);
  const double x4 = x + dt * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 +
                              e6 * k6 + e7 * k7);
  if (!std::isfinite(x5) || !std::isfinite(x4)) {
    out.finite = false;
    return out;
  }
  out.x_new = x5;
  out.err = std::fabs(x5 - x4);
  out.scale = abs_tol + rel_tol * std::max(std::fabs(x), std::fabs(x5));
  out.accepted = out.err <= out.scale;
  return out;
}

double step_growth(double err, double scale) {
  if (err == 0.0) return 5.0;
  return std::clamp(0.9 * std::pow(scale / err, 0.2), 0.2, 5.0);
}

struct SegmentClock {
  int id = 0;
  double entered_at = 0.0;
};

// Exact traversal of the plateau/ramp structure from (t0, x0) up to time
// T. Plateaus integrate linearly; ramps solve in closed form (the level
// grows exponentially along a linear ramp); past the third ramp every
// ramp crossing costs less time than a double can resolve.
void walk_plateaus(double t0, double x0, double T, SegmentClock clock,
                   OdeResult& res) {
  double t = t0;
  double x = x0;
  if (bad_f_segment(x) != clock.id) clock = {bad_f_segment(x), t};

  auto finish_double = [&](double xf) {
    res.x_final = xf;
    res.x_final_tower = {0, xf};
    res.final_segment = bad_f_segment(xf);
    res.time_in_final_segment = T - clock.entered_at;
  };
  auto hop = [&](int new_seg) {
    ++res.steps;
    clock = {new_seg, t};
  };

  if (x < 1.0) {  // dx/dt = (e-1)x: exponential in time
    const double rate = std::numbers::e - 1.0;
    if (x == 0.0) {  // fixed point
      finish_double(0.0);
      return;
    }
    const double t_exit = std::log(1.0 / x) / rate;
    if (t_exit >= T - t) {
      finish_double(x * std::exp(rate * (T - t)));
      return;
    }
    t += t_exit;
    x = 1.0;
    hop(1);
  }

  int i = bad_f_segment(x);
  bool on_ramp = i < 0;
  if (on_ramp) i = -i;

  for (;; ++i, on_ramp = false) {
    if (res.steps >= 1'000'000)
      throw NumericFailure("ode_integrate: plateau walk did not terminate");

    if (!on_ramp) {
      if (i <= 3) {
        const double value = phi_double(i) - phi_double(i - 1);
        const double end = 0.5 * phi_double(i);
        const double t_cross = (end - x) / value;
        if (t_cross >= T - t) {
          finish_double(x + value * (T - t));
          return;
        }
        t += t_cross;
        x = end;
      } else {
        // Every representable point of this plateau lies within e^{-phi_3}
        // of its left edge in crossing time, so mid-entry and edge-entry
        // are indistinguishable in doubles.
        const double t_cross = osgood_term(i);
        if (t_cross >= T - t) {
          const double rem = T - t;
          res.final_segment = i;
          res.time_in_final_segment = rem;
          // x = phi_{i-1} + (phi_i - phi_{i-1})*rem; only one level past
          // phi_3 can the rem factor still be resolved
          res.x_final_tower =
              (i == 4)
                  ? tower_normalize({1, phi_double(3) + std::log(rem)})
                  : phi_seq(i);
          res.x_final = tower_to_double(res.x_final_tower);
          return;
        }
        t += t_cross;
      }
      hop(-i);
    }

    // ramp (phi_i/2, phi_i)
    if (i <= 2) {
      const double lo = 0.5 * phi_double(i);
      const double hi = phi_double(i);
      const double A = phi_double(i) - phi_double(i - 1);
      const double B = phi_double(i + 1) - phi_double(i);
      const double span = (hi - lo) / (B - A);
      const double level = bad_f_eval(std::max(x, lo));
      const double t_ramp = span * std::log(B / level);
      if (t_ramp >= T - t) {
        const double level_end = level * std::exp((T - t) / span);
        finish_double(lo + (level_end - A) * span);
        return;
      }
      t += t_ramp;
      x = hi;
    } else if (i == 3) {
      // crossing time ~ 1e-1656507: zero in doubles
      x = phi_double(3);
    }
    // ramps past the third also cost no representable time; the state
    // moves to the next plateau's left edge, tracked implicitly
    hop(i + 1);
  }
}

struct GenericOutcome {
  OdeResult res;
  bool handed_over = false;
  double t = 0.0;
  double x = 0.0;
  SegmentClock clock;
};

GenericOutcome integrate_generic(const SourceFunction& f, double x0,
                                 double T, const OdeOptions& opts,
                                 bool stop_at_handoff, double handoff_x) {
  GenericOutcome out;
  OdeResult& res = out.res;
  const bool piecewise = std::holds_alternative<BadOsgood>(f);
  double t = 0.0;
  double x = x0;
  double dt_ctrl = std::min(opts.dt_init, T);
  SegmentClock clock{piecewise ? bad_f_segment(x0) : 0, 0.0};
  auto eval = [&](double s) { return source_eval(f, std::max(s, 0.0)); };

  while (t < T) {
    if (res.steps >= opts.max_steps)
      throw NumericFailure("ode_integrate: step budget exhausted");
    const bool final_sliver = dt_ctrl >= T - t;
    const double dt = final_sliver ? T - t : dt_ctrl;
    const StepOutcome step =
        dopri5_step(eval, x, dt, opts.rel_tol, opts.abs_tol);
    ++res.steps;
    if (step.finite && step.accepted) {
      if (stop_at_handoff && step.x_new >= handoff_x) {
        out.handed_over = true;
        out.t = t;
        out.x = x;
        out.clock = clock;
        return out;
      }
      t = final_sliver ? T : t + dt;
      x = step.x_new;
      if (piecewise) {
        const int seg = bad_f_segment(x);
        if (seg != clock.id) clock = {seg, t};
      }
      if (x > opts.blowup_threshold) {
        res.blew_up = true;
        res.t_blowup = t;
        break;
      }
      dt_ctrl = dt * step_growth(step.err, step.scale);
      continue;
    }
    dt_ctrl = step.finite ? dt * step_growth(step.err, step.scale)
                          : dt * 0.2;
    if (dt_ctrl < 1e-15 * std::max(1.0, t)) {
      res.blew_up = true;
      res.t_blowup = t;
      break;
    }
  }
  res.x_final = x;
  res.x_final_tower = {0, x};
  if (piecewise) {
    res.final_segment = bad_f_segment(x);
    res.time_in_final_segment = (res.blew_up ? res.t_blowup : T) -
                                clock.entered_at;
  }
  out.t = t;
  out.x = x;
  out.clock = clock;
  return out;
}

}  // namespace

OdeResult ode_integrate(const SourceFunction& f, double x0, double T,
                        const OdeOptions& opts) {
  validate(f);
  if (!(x0 >= 0.0)) throw InvalidQuery("ode_integrate: x0 must be >= 0");
  if (!(T > 0.0)) throw InvalidQuery("ode_integrate: horizon must be > 0");
  if (!(opts.rel_tol > 0.0) || !(opts.abs_tol > 0.0) || opts.max_steps < 1 ||
      !(opts.dt_init > 0.0))
    throw InvalidQuery("ode_integrate: bad options");

  if (std::holds_alternative<BadOsgood>(f)) {
    const double handoff = phi_double(2);
    if (x0 >= handoff) {
      OdeResult res;
      walk_plateaus(0.0, x0, T, {bad_f_segment(x0), 0.0}, res);
      return res;
    }
    GenericOutcome g = integrate_generic(f, x0, T, opts, true, handoff);
    if (g.handed_over) {
      walk_plateaus(g.t, g.x, T, g.clock, g.res);
    }
    return g.res;
  }
  return integrate_generic(f, x0, T, opts, false, 0.0).res;
}

}  // namespace heatlab
