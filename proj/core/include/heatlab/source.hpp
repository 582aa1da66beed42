#pragma once

#include <variant>
#include <vector>

namespace heatlab {

// f(s) = s^p, p > 1.
struct FujitaPower {
  double p = 2.0;
};

// The plateau/ramp construction from the osgood module.
struct BadOsgood {};

// Monotone piecewise-linear table; constant extension outside the
// breakpoint range (a single breakpoint is a constant function).
struct TableSource {
  std::vector<double> s;
  std::vector<double> f;
};

using SourceFunction = std::variant<FujitaPower, BadOsgood, TableSource>;

void validate(const SourceFunction& src);

// Validating factory; returns the argument after checking its invariants.
SourceFunction make_source(SourceFunction src);

// Evaluates f(s) for s >= 0. Nondecreasing and f(0) >= 0 for every kind.
double source_eval(const SourceFunction& src, double s);

}  // namespace heatlab
