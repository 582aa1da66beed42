#pragma once

#include <limits>
#include <variant>
#include <vector>

#include "heatlab/geometry.hpp"
#include "heatlab/kernel.hpp"

namespace heatlab {

// Radially symmetric whole space of dimension n; closed-form radial
// kernels are implemented for n = 1, 2, 3.
struct FreeSpace {
  std::size_t n = 1;
};

// Where linear evolution runs: a Dirichlet interval acting on even data,
// or free space acting on radial data.
using EvolveDomain = std::variant<Interval, FreeSpace>;

std::size_t dimension(const EvolveDomain& dom);

// min(cap, r^-alpha) for r <= R, zero beyond R.
struct SingularData {
  double alpha = 0.5;
  double R = 0.5;
  double cap = std::numeric_limits<double>::infinity();
};

// Checks 0 < alpha < n, R > 0, cap > R^-alpha, and that the closed support
// ball fits inside the domain.
void validate(const EvolveDomain& dom, const SingularData& d);

// Pointwise initial value at radius r >= 0.
double singular_data_eval(const SingularData& d, double r);

struct EvolveOptions {
  double tol_rel = 1e-8;   // relative quadrature target
  int max_panels = 1 << 20;
  SeriesBudget budget{};
};

// w(x, t): the heat evolution of the singular data, by kernel quadrature
// with the power singularity absorbed into the integration variable
// (s = r^(n - alpha)). x is the signed coordinate in one dimension and the
// radius otherwise. Throws NumericFailure when the quadrature stalls.
double evolve_singular(const EvolveDomain& dom, const SingularData& d,
                       double x, double t, const EvolveOptions& opts = {});

std::vector<double> evolve_profile(const EvolveDomain& dom,
                                   const SingularData& d,
                                   const std::vector<double>& xs, double t,
                                   const EvolveOptions& opts = {});

// Log-spaced time grid over [lo_factor * T, T] with t = 0 prepended.
struct TimeGridSpec {
  int points = 24;
  double lo_factor = 1e-6;
};

std::vector<double> time_grid(double T, const TimeGridSpec& grid);

struct InfimumM {
  double M = 0.0;  // grid minimum of the whole-space evolution at |x| = R
  double T = 0.0;  // horizon eps^2 / n
};

// Minimum over the time grid of the free-space evolution of d evaluated on
// the support sphere |x| = R. The horizon is T = eps^2/n with eps the
// clearance of the support ball inside dom. Strictly positive by
// construction; a non-positive result signals quadrature failure.
InfimumM infimum_M(const Domain& dom, const SingularData& d,
                   const TimeGridSpec& grid = {},
                   const EvolveOptions& opts = {});

}  // namespace heatlab
