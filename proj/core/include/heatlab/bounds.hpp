#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "heatlab/geometry.hpp"
#include "heatlab/kernel.hpp"

namespace heatlab {

// 1 - 2/e, the one-dimensional short-time comparison constant.
inline constexpr double kBeta = 1.0 - 2.0 / std::numbers::e;

// Slack below this counts as a genuine violation rather than roundoff.
inline constexpr double kViolationSlack = -1e-12;

// Distance from the segment [x, y] to the boundary. The domains here are
// convex, so it is the smaller of the two endpoint clearances.
struct SegmentClearance {
  double eps = 0.0;
};

SegmentClearance segment_clearance(const Domain& dom,
                                   const std::vector<double>& x,
                                   const std::vector<double>& y);

enum class BoundKind {
  ShortTime1D,  // G_1 (1 - 2 e^{-eps^2/t}), any t, may be negative
  ShortTimeND,  // beta^n G_n, asserted for t <= eps^2/n
  AllTime1D,    // e^{-pi^2 t/4 eps^2} G_1
  AllTimeND,    // e^{-n^2 pi^2 t/4 eps^2} G_n
  Center,       // (4 pi t)^{-1/2} e^{-pi^2 t/4 a^2} at the midpoint
  Semigroup,    // e^{-|x-y|^2/4t} K_eps(0,0;t)
};

// Kebab-case names used by the CLI and reports ("short-time-nd", ...).
std::string to_string(BoundKind kind);
BoundKind bound_kind_from_string(const std::string& name);

// beta^n G_n(x,y;t). Throws OutOfValidity for t > eps^2/n, where the
// estimate is not asserted; the validity interval is closed.
double short_time_bound(std::size_t n, SegmentClearance eps,
                        const std::vector<double>& x,
                        const std::vector<double>& y, double t);

// G_1(x,y;t) (1 - 2 e^{-eps^2/t}). Defined for all t >= the time floor;
// negative values mean the estimate is vacuous there, and verification
// only has content where the factor is positive.
double raw_short_time_bound_1d(SegmentClearance eps, double x, double y,
                               double t);

// e^{-n^2 pi^2 t / 4 eps^2} G_n(x,y;t), valid for every t.
double all_time_bound(std::size_t n, SegmentClearance eps,
                      const std::vector<double>& x,
                      const std::vector<double>& y, double t);

// (4 pi t)^{-1/2} e^{-pi^2 t / 4 a^2}, a floor for the kernel at the
// midpoint of an interval of half-width a.
double center_lower_bound(double a, double t);

// e^{-|x-y|^2/4t} K_eps(0,0;t): the kernel of the clearance interval
// transported to the pair (x, y).
double semigroup_bound(const Interval& dom, SegmentClearance eps, double x,
                       double y, double t, const SeriesBudget& b = {});

// Minimum of (1 - 2 e^{-1/s}) - e^{-s} over a log grid of `samples` points
// in (0, s_max]; nonnegative output witnesses the small-time inequality
// used to squeeze the centre bound below the kernel.
double small_time_factor_margin(double s_max, int samples);

// Sweep grid: nine interior nodes per axis at width fractions 0.1..0.9 and
// 25 times log-spaced over [1e-4 a^2, 10 a^2] (a = smallest half-width).
// One-dimensional sweeps pair every node with every node; box sweeps pair
// each tensor node with itself and with its antipode.
struct GridSpec {
  int points_per_axis = 9;
  int time_points = 25;
  double t_lo_factor = 1e-4;
  double t_hi_factor = 10.0;
};

struct SweepRow {
  std::vector<double> x;
  std::vector<double> y;
  double t = 0.0;
  double kernel = 0.0;
  double bound = 0.0;
  double slack = 0.0;
};

struct SweepReport {
  BoundKind kind{};
  std::string grid_note;
  std::vector<SweepRow> rows;
  double min_slack = 0.0;
  std::vector<SweepRow> violations;  // rows with slack < kViolationSlack
};

// Evaluates kernel minus bound on the grid. ShortTimeND rows are restricted
// to the bound's validity window t <= eps^2/n; every other kind sweeps the
// full time range. Violations are data, not errors.
SweepReport sweep_verify(const Domain& dom, BoundKind kind,
                         const GridSpec& grid = {},
                         const SeriesBudget& b = {});

}  // namespace heatlab
