#pragma once

#include <cstddef>
#include <vector>

#include "heatlab/geometry.hpp"

namespace heatlab {

// Times below this are rejected: both series degenerate at double
// precision long before the physics becomes interesting.
inline constexpr double kTimeFloor = 1e-12;

// Truncation control shared by the two series evaluators.
struct SeriesBudget {
  double tol = 1e-12;  // relative tolerance on the truncated tail
  int k_max_cap = 512; // hard cap on the index magnitude

  void validate() const;
};

// Dimension, endpoints and time of a whole-space kernel query.
struct GaussianParams {
  std::size_t n = 1;
  std::vector<double> x;
  std::vector<double> y;
  double t = 0.0;
};

// (4 pi t)^{-n/2} exp(-|x-y|^2 / 4t), the whole-space heat kernel.
double gaussian_kernel(const GaussianParams& p);

// Same, parameterised by |x-y| directly.
double gaussian_kernel(std::size_t n, double dist, double t);

// Dirichlet heat kernel of (-a, a) summed over reflected point sources.
// Truncation stops once the omitted tail is provably below
// tol * (4 pi t)^{-1/2}; the result is clamped to be nonnegative.
// Throws BudgetExhausted when the cap is reached first (t too large for
// this series; use the eigenfunction form instead).
double interval_kernel_images(const Interval& dom, double x, double y,
                              double t, const SeriesBudget& b = {});

// Dirichlet heat kernel of (-a, a) via its sine eigenfunction expansion.
// Truncation stops once the term envelope falls below tol times the
// larger of the partial sum and the free-space scale a*(4 pi t)^{-1/2}.
// Throws BudgetExhausted when the cap is reached first (t too small for
// this series; use the image form instead).
double interval_kernel_eigen(const Interval& dom, double x, double y,
                             double t, const SeriesBudget& b = {});

enum class KernelMethod { Images, Eigen };

// Which series interval_kernel dispatches to at time t.
KernelMethod select_method(const Interval& dom, double t,
                           double c_cross = 1.0);

// Dirichlet heat kernel of (-a, a): image sum for t <= a^2 * c_cross,
// eigenfunction series otherwise. Identical value contract either way.
double interval_kernel(const Interval& dom, double x, double y, double t,
                       const SeriesBudget& b = {}, double c_cross = 1.0);

// Product of per-axis interval kernels on an axis-aligned box.
double box_kernel(const Box& dom, const std::vector<double>& x,
                  const std::vector<double>& y, double t,
                  const SeriesBudget& b = {}, double c_cross = 1.0);

// Dispatch on the domain variant.
double kernel(const Domain& dom, const std::vector<double>& x,
              const std::vector<double>& y, double t,
              const SeriesBudget& b = {}, double c_cross = 1.0);

// Exact integral of interval_kernel(a, x, . , t) over [lo, hi], evaluated
// term by term (error function form under the image sum, sine antiderivative
// under the eigen series). [lo, hi] must sit inside [-a, a].
double interval_kernel_mass(const Interval& dom, double x, double lo,
                            double hi, double t, const SeriesBudget& b = {},
                            double c_cross = 1.0);

}  // namespace heatlab
