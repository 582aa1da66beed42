#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "heatlab/errors.hpp"

namespace heatlab {

// Open interval (-a, a) centred at the origin.
struct Interval {
  double a = 1.0;  // half-width
};

// Axis-aligned centred box: the product of (-a_j, a_j) over all axes.
struct Box {
  std::vector<double> half_widths;
};

using Domain = std::variant<Interval, Box>;

// Throws InvalidQuery unless all half-widths are finite and positive.
void validate(const Domain& dom);

std::size_t dimension(const Domain& dom);

// True when x lies in the open domain; throws on dimension mismatch.
bool contains(const Domain& dom, const std::vector<double>& x);

// True when x lies in the closed domain.
bool contains_closure(const Domain& dom, const std::vector<double>& x);

// Distance from an interior point to the boundary, minimised over axes.
// Throws InvalidQuery when the point is on or outside the boundary.
double point_clearance(const Domain& dom, const std::vector<double>& x);

double point_clearance(const Interval& dom, double x);

}  // namespace heatlab
