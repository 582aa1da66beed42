#include "heatlab/geometry.hpp"

#include <cmath>
#include <limits>

namespace heatlab {

namespace {

void check_dim(const Domain& dom, const std::vector<double>& x) {
  if (x.size() != dimension(dom)) {
    throw InvalidQuery("point dimension does not match domain dimension");
  }
  for (double v : x) {
    if (!std::isfinite(v)) throw InvalidQuery("point coordinate is not finite");
  }
}

}  // namespace

void validate(const Domain& dom) {
  if (const auto* iv = std::get_if<Interval>(&dom)) {
    if (!std::isfinite(iv->a) || iv->a <= 0.0) {
      throw InvalidQuery("interval half-width must be finite and positive");
    }
    return;
  }
  const auto& box = std::get<Box>(dom);
  if (box.half_widths.empty()) {
    throw InvalidQuery("box needs at least one axis");
  }
  for (double a : box.half_widths) {
    if (!std::isfinite(a) || a <= 0.0) {
      throw InvalidQuery("box half-widths must be finite and positive");
    }
  }
}

std::size_t dimension(const Domain& dom) {
  if (std::holds_alternative<Interval>(dom)) return 1;
  return std::get<Box>(dom).half_widths.size();
}

bool contains(const Domain& dom, const std::vector<double>& x) {
  check_dim(dom, x);
  if (const auto* iv = std::get_if<Interval>(&dom)) {
    return std::abs(x[0]) < iv->a;
  }
  const auto& box = std::get<Box>(dom);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (std::abs(x[j]) >= box.half_widths[j]) return false;
  }
  return true;
}

bool contains_closure(const Domain& dom, const std::vector<double>& x) {
  check_dim(dom, x);
  if (const auto* iv = std::get_if<Interval>(&dom)) {
    return std::abs(x[0]) <= iv->a;
  }
  const auto& box = std::get<Box>(dom);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (std::abs(x[j]) > box.half_widths[j]) return false;
  }
  return true;
}

double point_clearance(const Domain& dom, const std::vector<double>& x) {
  check_dim(dom, x);
  double best = std::numeric_limits<double>::infinity();
  if (const auto* iv = std::get_if<Interval>(&dom)) {
    best = iv->a - std::abs(x[0]);
  } else {
    const auto& box = std::get<Box>(dom);
    for (std::size_t j = 0; j < x.size(); ++j) {
      best = std::min(best, box.half_widths[j] - std::abs(x[j]));
    }
  }
  if (best <= 0.0) {
    throw InvalidQuery("clearance undefined for a point on or outside the boundary");
  }
  return best;
}

double point_clearance(const Interval& dom, double x) {
  return point_clearance(Domain{dom}, std::vector<double>{x});
}

}  // namespace heatlab
