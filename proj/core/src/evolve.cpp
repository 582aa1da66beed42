#include "heatlab/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "heatlab/errors.hpp"
#include "heatlab/quadrature.hpp"

namespace heatlab {
namespace {

// exp(-z) * I0(z). The direct product stays in range up to z ~ 700; past
// that the large-argument expansion is accurate to ~1e-12.
double bessel_i0_scaled(double z) {
  if (z < 0.0) throw InvalidQuery("bessel_i0_scaled: negative argument");
  if (z < 700.0) return std::cyl_bessel_i(0.0, z) * std::exp(-z);
  const double inv = 1.0 / z;
  double series = 1.0 + inv * (0.125 + inv * (0.0703125 +
                  inv * (0.0732421875 + inv * 0.112152099609375)));
  return series / std::sqrt(2.0 * std::numbers::pi * z);
}

void check_time(double t) {
  if (!(t >= kTimeFloor))
    throw InvalidQuery("evolve_singular: t below the supported time floor");
}

// Kernel between the radius-r evaluation point and the radius-rho shell,
// with the rho^(n-1) shell weight divided out.
double shell_kernel(const EvolveDomain& dom, double x, double rho, double t,
                    const EvolveOptions& opts) {
  if (const Interval* iv = std::get_if<Interval>(&dom)) {
    return interval_kernel(*iv, x, rho, t, opts.budget) +
           interval_kernel(*iv, x, -rho, t, opts.budget);
  }
  const FreeSpace& fs = std::get<FreeSpace>(dom);
  const double r = std::fabs(x);
  switch (fs.n) {
    case 1:
      return gaussian_kernel(1, r - rho, t) + gaussian_kernel(1, r + rho, t);
    case 2: {
      const double diff = r - rho;
      return 0.5 / t * std::exp(-diff * diff / (4.0 * t)) *
             bessel_i0_scaled(r * rho / (2.0 * t));
    }
    case 3: {
      const double pre = 1.0 / std::sqrt(4.0 * std::numbers::pi * t);
      const double diff = r - rho;
      const double gauss = std::exp(-diff * diff / (4.0 * t));
      const double z = r * rho / t;
      if (z < 1e-12) return pre * gauss / t;  // -expm1(-z)/z -> 1
      return pre * gauss * (-std::expm1(-z)) / (r * rho);
    }
    default:
      throw InvalidQuery("evolve_singular: free space supports n <= 3");
  }
}

}  // namespace

std::size_t dimension(const EvolveDomain& dom) {
  if (std::holds_alternative<Interval>(dom)) return 1;
  return std::get<FreeSpace>(dom).n;
}

void validate(const EvolveDomain& dom, const SingularData& d) {
  const std::size_t n = dimension(dom);
  if (const FreeSpace* fs = std::get_if<FreeSpace>(&dom)) {
    if (fs->n < 1 || fs->n > 3)
      throw InvalidQuery("evolve domain: free space supports n in {1,2,3}");
  } else {
    validate(std::get<Interval>(dom));
  }
  if (!(d.alpha > 0.0) || !(d.alpha < static_cast<double>(n)))
    throw InvalidQuery("singular data: alpha must lie in (0, n)");
  if (!(d.R > 0.0) || !std::isfinite(d.R))
    throw InvalidQuery("singular data: R must be positive and finite");
  if (!(d.cap > std::pow(d.R, -d.alpha)))
    throw InvalidQuery("singular data: cap must exceed R^-alpha");
  if (const Interval* iv = std::get_if<Interval>(&dom)) {
    if (!(d.R < iv->a))
      throw InvalidQuery("singular data: support ball must clear the boundary");
  }
}

double singular_data_eval(const SingularData& d, double r) {
  if (!(r >= 0.0)) throw InvalidQuery("singular_data_eval: negative radius");
  if (r > d.R) return 0.0;
  return std::min(d.cap, std::pow(r, -d.alpha));
}

double evolve_singular(const EvolveDomain& dom, const SingularData& d,
                       double x, double t, const EvolveOptions& opts) {
  validate(dom, d);
  check_time(t);
  if (const Interval* iv = std::get_if<Interval>(&dom)) {
    if (std::fabs(x) > iv->a)
      throw InvalidQuery("evolve_singular: point outside the domain");
    if (std::fabs(x) == iv->a) return 0.0;
  }
  if (!std::isfinite(x)) throw InvalidQuery("evolve_singular: x not finite");

  const std::size_t n = dimension(dom);
  const double q = static_cast<double>(n) - d.alpha;
  const double r = std::fabs(x);

  // The kernel factor decays like exp(-(r - rho)^2 / 4t); beyond 12
  // standard deviations the contribution is below 1e-31 of the peak.
  const double window = 12.0 * std::sqrt(2.0 * t);
  const double lo = std::max(0.0, r - window);
  const double hi = std::min(d.R, r + window);
  if (!(lo < hi)) return 0.0;

  const double y_cap =
      std::isfinite(d.cap) ? std::min(std::pow(d.cap, -1.0 / d.alpha), d.R)
                           : 0.0;

  double total = 0.0;
  const double plateau_hi = std::min(hi, y_cap);
  if (lo < plateau_hi) {
    auto f = [&](double rho) {
      return d.cap * shell_kernel(dom, x, rho, t, opts) *
             std::pow(rho, static_cast<double>(n) - 1.0);
    };
    total += integrate_simpson(f, lo, plateau_hi, opts.tol_rel, 0.0,
                               opts.max_panels)
                 .value;
  }
  const double sing_lo = std::max(lo, y_cap);
  if (sing_lo < hi) {
    auto f = [&](double s) {
      const double rho = std::pow(s, 1.0 / q);
      return shell_kernel(dom, x, rho, t, opts) / q;
    };
    total += integrate_simpson(f, std::pow(sing_lo, q), std::pow(hi, q),
                               opts.tol_rel, 0.0, opts.max_panels)
                 .value;
  }
  return std::max(total, 0.0);
}

std::vector<double> evolve_profile(const EvolveDomain& dom,
                                   const SingularData& d,
                                   const std::vector<double>& xs, double t,
                                   const EvolveOptions& opts) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(evolve_singular(dom, d, x, t, opts));
  return out;
}

std::vector<double> time_grid(double T, const TimeGridSpec& grid) {
  if (!(T > 0.0) || !std::isfinite(T))
    throw InvalidQuery("time_grid: horizon must be positive and finite");
  if (grid.points < 2) throw InvalidQuery("time_grid: need at least 2 points");
  if (!(grid.lo_factor > 0.0) || !(grid.lo_factor < 1.0))
    throw InvalidQuery("time_grid: lo_factor must lie in (0, 1)");
  std::vector<double> ts;
  ts.reserve(static_cast<std::size_t>(grid.points) + 1);
  ts.push_back(0.0);
  for (int j = 0; j < grid.points; ++j) {
    const double frac = static_cast<double>(j) / (grid.points - 1);
    ts.push_back(T * std::pow(grid.lo_factor, 1.0 - frac));
  }
  return ts;
}

InfimumM infimum_M(const Domain& dom, const SingularData& d,
                   const TimeGridSpec& grid, const EvolveOptions& opts) {
  validate(dom);
  const std::size_t n = dimension(dom);
  double min_half = 0.0;
  if (const Interval* iv = std::get_if<Interval>(&dom)) {
    min_half = iv->a;
  } else {
    const Box& box = std::get<Box>(dom);
    min_half = *std::min_element(box.half_widths.begin(),
                                 box.half_widths.end());
  }
  const EvolveDomain free = FreeSpace{n};
  validate(free, d);
  const double eps = min_half - d.R;
  if (!(eps > 0.0))
    throw InvalidQuery("infimum_M: support ball must clear the boundary");

  const double T = eps * eps / static_cast<double>(n);
  InfimumM out;
  out.T = T;
  out.M = std::numeric_limits<double>::infinity();
  for (double t : time_grid(T, grid)) {
    const double w = (t == 0.0) ? singular_data_eval(d, d.R)
                                : evolve_singular(free, d, d.R, t, opts);
    out.M = std::min(out.M, w);
  }
  if (!(out.M > 0.0))
    throw NumericFailure("infimum_M: non-positive minimum, quadrature failed");
  return out;
}

}  // namespace heatlab
