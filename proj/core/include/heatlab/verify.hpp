#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace heatlab {

// One verification check: a named pass/fail plus a deterministic
// measurement summary. seconds is wall time and is reported separately so
// the summary itself stays reproducible.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Kernel-versus-bound curve on the frame [0, width] (the interval shifted
// so its left endpoint is the origin). bound is the short-time lower bound
// where it applies and 0 elsewhere.
struct FigurePoint {
  double x = 0.0;
  double kernel = 0.0;
  double bound = 0.0;
};

struct KernelFigure {
  double width = 0.0;
  double y = 0.0;
  double t = 0.0;
  std::vector<FigurePoint> points;
  std::size_t peak_index = 0;
  double min_slack = 0.0;
};

KernelFigure kernel_figure(double width, double y, double t, int points);

inline constexpr int kCheckCount = 9;

// Runs verification check `index` (1-based). An exception inside a check
// is converted into a failure with the message in `detail`.
CriterionResult run_acceptance_check(int index);

// All checks, in order.
std::vector<CriterionResult> run_acceptance();

}  // namespace heatlab
