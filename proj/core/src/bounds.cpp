#include "heatlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace heatlab {

namespace {

constexpr double kPi = std::numbers::pi;

void check_eps(SegmentClearance eps) {
  if (!std::isfinite(eps.eps) || eps.eps <= 0.0) {
    throw InvalidQuery("segment clearance must be finite and positive");
  }
}

double gauss_pair(std::size_t n, const std::vector<double>& x,
                  const std::vector<double>& y, double t) {
  return gaussian_kernel(GaussianParams{n, x, y, t});
}

}  // namespace

SegmentClearance segment_clearance(const Domain& dom,
                                   const std::vector<double>& x,
                                   const std::vector<double>& y) {
  const double cx = point_clearance(dom, x);
  const double cy = point_clearance(dom, y);
  return SegmentClearance{std::min(cx, cy)};
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::ShortTime1D: return "short-time-1d";
    case BoundKind::ShortTimeND: return "short-time-nd";
    case BoundKind::AllTime1D: return "all-time-1d";
    case BoundKind::AllTimeND: return "all-time-nd";
    case BoundKind::Center: return "center";
    case BoundKind::Semigroup: return "semigroup";
  }
  throw InvalidQuery("unknown bound kind");
}

BoundKind bound_kind_from_string(const std::string& name) {
  if (name == "short-time-1d") return BoundKind::ShortTime1D;
  if (name == "short-time-nd") return BoundKind::ShortTimeND;
  if (name == "all-time-1d") return BoundKind::AllTime1D;
  if (name == "all-time-nd") return BoundKind::AllTimeND;
  if (name == "center") return BoundKind::Center;
  if (name == "semigroup") return BoundKind::Semigroup;
  throw InvalidQuery("unknown bound kind: " + name);
}

double short_time_bound(std::size_t n, SegmentClearance eps,
                        const std::vector<double>& x,
                        const std::vector<double>& y, double t) {
  check_eps(eps);
  if (n < 1) throw InvalidQuery("dimension must be at least 1");
  if (t > eps.eps * eps.eps / static_cast<double>(n)) {
    throw OutOfValidity(
        "short-time bound asserted only for t <= eps^2/n");
  }
  return std::pow(kBeta, static_cast<double>(n)) * gauss_pair(n, x, y, t);
}

double raw_short_time_bound_1d(SegmentClearance eps, double x, double y,
                               double t) {
  check_eps(eps);
  const double factor = 1.0 - 2.0 * std::exp(-eps.eps * eps.eps / t);
  return gaussian_kernel(1, x - y, t) * factor;
}

double all_time_bound(std::size_t n, SegmentClearance eps,
                      const std::vector<double>& x,
                      const std::vector<double>& y, double t) {
  check_eps(eps);
  if (n < 1) throw InvalidQuery("dimension must be at least 1");
  const double nn = static_cast<double>(n);
  const double pref =
      std::exp(-nn * nn * kPi * kPi * t / (4.0 * eps.eps * eps.eps));
  return pref * gauss_pair(n, x, y, t);
}

double center_lower_bound(double a, double t) {
  if (!std::isfinite(a) || a <= 0.0) {
    throw InvalidQuery("interval half-width must be finite and positive");
  }
  return gaussian_kernel(1, 0.0, t) * std::exp(-kPi * kPi * t / (4.0 * a * a));
}

double semigroup_bound(const Interval& dom, SegmentClearance eps, double x,
                       double y, double t, const SeriesBudget& b) {
  check_eps(eps);
  if (std::abs(x) > dom.a || std::abs(y) > dom.a) {
    throw InvalidQuery("kernel endpoint outside the closed interval");
  }
  const double d = x - y;
  return std::exp(-d * d / (4.0 * t)) *
         interval_kernel(Interval{eps.eps}, 0.0, 0.0, t, b);
}

double small_time_factor_margin(double s_max, int samples) {
  if (!(s_max > 0.0) || samples < 2) {
    throw InvalidQuery("need a positive range and at least two samples");
  }
  double worst = std::numeric_limits<double>::infinity();
  for (int j = 0; j < samples; ++j) {
    const double frac = static_cast<double>(j) / (samples - 1);
    const double s = s_max * std::pow(1e-6, frac);
    const double margin = (1.0 - 2.0 * std::exp(-1.0 / s)) - std::exp(-s);
    worst = std::min(worst, margin);
  }
  return worst;
}

namespace {

std::vector<double> axis_nodes(double a, int m) {
  std::vector<double> out;
  out.reserve(m);
  for (int i = 1; i <= m; ++i) {
    const double frac = static_cast<double>(i) / (m + 1);
    out.push_back(a * (2.0 * frac - 1.0));
  }
  return out;
}

std::vector<double> time_nodes(double a_ref, const GridSpec& grid) {
  std::vector<double> out;
  out.reserve(grid.time_points);
  const double lo = grid.t_lo_factor * a_ref * a_ref;
  const double hi = grid.t_hi_factor * a_ref * a_ref;
  for (int j = 0; j < grid.time_points; ++j) {
    const double frac = grid.time_points == 1
                            ? 0.0
                            : static_cast<double>(j) / (grid.time_points - 1);
    out.push_back(lo * std::pow(hi / lo, frac));
  }
  return out;
}

// All tensor-product nodes of the per-axis grids.
std::vector<std::vector<double>> box_nodes(const Box& box, int m) {
  std::vector<std::vector<double>> per_axis;
  for (double a : box.half_widths) per_axis.push_back(axis_nodes(a, m));
  const std::size_t n = box.half_widths.size();
  std::vector<std::vector<double>> out;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    std::vector<double> node(n);
    for (std::size_t j = 0; j < n; ++j) node[j] = per_axis[j][idx[j]];
    out.push_back(std::move(node));
    std::size_t j = 0;
    while (j < n && ++idx[j] == per_axis[j].size()) {
      idx[j] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return out;
}

void require_interval(const Domain& dom, BoundKind kind) {
  if (!std::holds_alternative<Interval>(dom)) {
    throw InvalidQuery("bound kind " + to_string(kind) +
                       " is defined on intervals");
  }
}

}  // namespace

SweepReport sweep_verify(const Domain& dom, BoundKind kind,
                         const GridSpec& grid, const SeriesBudget& b) {
  validate(dom);
  if (grid.points_per_axis < 1 || grid.time_points < 1 ||
      !(grid.t_lo_factor > 0.0) || !(grid.t_hi_factor >= grid.t_lo_factor)) {
    throw InvalidQuery("sweep grid specification is inconsistent");
  }
  const std::size_t n = dimension(dom);

  // pairs of evaluation points
  std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
  double a_ref = 0.0;
  if (const auto* iv = std::get_if<Interval>(&dom)) {
    a_ref = iv->a;
    const auto xs = axis_nodes(iv->a, grid.points_per_axis);
    if (kind == BoundKind::Center) {
      pairs.push_back({{0.0}, {0.0}});
    } else {
      for (double x : xs)
        for (double y : xs) pairs.push_back({{x}, {y}});
    }
  } else {
    const auto& box = std::get<Box>(dom);
    a_ref = *std::min_element(box.half_widths.begin(), box.half_widths.end());
    auto nodes = box_nodes(box, grid.points_per_axis);
    for (const auto& z : nodes) {
      pairs.push_back({z, z});
      std::vector<double> anti(z.size());
      for (std::size_t j = 0; j < z.size(); ++j) anti[j] = -z[j];
      pairs.push_back({z, std::move(anti)});
    }
  }

  switch (kind) {
    case BoundKind::ShortTime1D:
    case BoundKind::AllTime1D:
    case BoundKind::Center:
    case BoundKind::Semigroup:
      require_interval(dom, kind);
      break;
    default:
      break;
  }

  const auto times = time_nodes(a_ref, grid);

  SweepReport report;
  report.kind = kind;
  report.grid_note = std::to_string(pairs.size()) + " pairs, " +
                     std::to_string(times.size()) + " times";
  double min_slack = std::numeric_limits<double>::infinity();

  for (const auto& [x, y] : pairs) {
    const SegmentClearance eps = segment_clearance(dom, x, y);
    for (double t : times) {
      double bound = 0.0;
      switch (kind) {
        case BoundKind::ShortTime1D:
          bound = raw_short_time_bound_1d(eps, x[0], y[0], t);
          break;
        case BoundKind::ShortTimeND: {
          if (t > eps.eps * eps.eps / static_cast<double>(n)) continue;
          bound = short_time_bound(n, eps, x, y, t);
          break;
        }
        case BoundKind::AllTime1D:
          bound = all_time_bound(1, eps, x, y, t);
          break;
        case BoundKind::AllTimeND:
          bound = all_time_bound(n, eps, x, y, t);
          break;
        case BoundKind::Center:
          bound = center_lower_bound(std::get<Interval>(dom).a, t);
          break;
        case BoundKind::Semigroup:
          bound = semigroup_bound(std::get<Interval>(dom), eps, x[0], y[0], t,
                                  b);
          break;
      }
      SweepRow row;
      row.x = x;
      row.y = y;
      row.t = t;
      row.kernel = kernel(dom, x, y, t, b);
      row.bound = bound;
      row.slack = row.kernel - bound;
      min_slack = std::min(min_slack, row.slack);
      if (row.slack < kViolationSlack) report.violations.push_back(row);
      report.rows.push_back(std::move(row));
    }
  }
  report.min_slack = report.rows.empty() ? 0.0 : min_slack;
  return report;
}

}  // namespace heatlab
