#include "heatlab/osgood.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "heatlab/errors.hpp"

namespace heatlab {
namespace {

// Collapsing below exp(700) ~ 1e304 keeps one exp of headroom before the
// double ceiling at exp(709.78).
constexpr double kCollapseTop = 700.0;

// phi_0 = 1, phi_{i+1} = e^{phi_i}, each rounded to nearest double;
// chaining std::exp instead drifts about 14 ulps by the third term
const double kPhi[4] = {1.0, std::numbers::e, 15.154262241479264,
                        3814279.1047602207};

double plateau_value(int i) {  // f on [phi_{i-1}, phi_i/2], i <= 3
  return kPhi[i] - kPhi[i - 1];
}

// log(f_hi - f_lo) across the i-th ramp, stable for i = 3 where the upper
// plateau value e^{phi_3} - phi_3 overflows.
double ramp_log_rise(int i) {
  if (i <= 2) return std::log(plateau_value(i + 1) - plateau_value(i));
  return kPhi[3];  // log(e^{phi_3} - phi_3 - (phi_3 - phi_2)) to the ulp
}

}  // namespace

TowerReal tower_normalize(TowerReal v) {
  if (v.depth < 0) throw InvalidQuery("tower: negative depth");
  while (v.depth >= 1 && v.top <= kCollapseTop) {
    v.top = std::exp(v.top);
    --v.depth;
  }
  return v;
}

int tower_compare(TowerReal a, TowerReal b) {
  a = tower_normalize(a);
  b = tower_normalize(b);
  if (a.depth != b.depth) {
    if (a.depth < b.depth) return -tower_compare(b, a);
    // a is deeper; peel the common exponentials
    const int extra = a.depth - b.depth;
    if (extra >= 2) return 1;  // exp(exp(>700)) tops any double
    const double ea = std::exp(a.top);  // may be +inf, still comparable
    if (ea > b.top) return 1;
    if (ea < b.top) return -1;
    return 0;
  }
  if (a.top < b.top) return -1;
  if (a.top > b.top) return 1;
  return 0;
}

double tower_to_double(TowerReal v) {
  v = tower_normalize(v);
  if (v.depth == 0) return v.top;
  if (v.depth == 1) return std::exp(v.top);
  return std::numeric_limits<double>::infinity();
}

std::string tower_to_string(TowerReal v) {
  v = tower_normalize(v);
  char buf[64];
  if (v.depth == 0) {
    std::snprintf(buf, sizeof buf, "%.17g", v.top);
    return buf;
  }
  std::snprintf(buf, sizeof buf, "exp^%d(%.17g)", v.depth, v.top);
  return buf;
}

TowerReal phi_seq(int i) {
  if (i < 0) throw InvalidQuery("phi_seq: negative index");
  if (i <= 3) return {0, kPhi[i]};
  return {i - 3, kPhi[3]};
}

double phi_double(int i) {
  if (i < 0 || i > 3)
    throw InvalidQuery("phi_double: value exceeds double range");
  return kPhi[i];
}

double bad_f_eval(double s) {
  if (!(s >= 0.0)) throw InvalidQuery("bad_f_eval: negative argument");
  if (s <= 1.0) return (std::numbers::e - 1.0) * s;
  for (int i = 1; i <= 3; ++i) {
    const double half = 0.5 * kPhi[i];
    if (s <= half) return plateau_value(i);
    if (s < kPhi[i]) {
      // evaluated in the log domain so the third ramp overflows to +inf
      // instead of producing garbage
      return plateau_value(i) +
             std::exp(ramp_log_rise(i) + std::log(s - half) - std::log(half));
    }
  }
  // plateau starting at phi_3: its value e^{phi_3} - phi_3 is not a double
  return std::numeric_limits<double>::infinity();
}

int bad_f_segment(double s) {
  if (!(s >= 0.0)) throw InvalidQuery("bad_f_segment: negative argument");
  if (s < 1.0) return 0;
  for (int i = 1; i <= 3; ++i) {
    if (s <= 0.5 * kPhi[i]) return i;
    if (s < kPhi[i]) return -i;
  }
  return 4;
}

double osgood_term(int i) {
  if (i < 1) throw InvalidQuery("osgood_term: index must be >= 1");
  if (i <= 3)
    return (0.5 * kPhi[i] - kPhi[i - 1]) / (kPhi[i] - kPhi[i - 1]);
  if (i == 4)  // correction exp(log(phi_3/2) - phi_3) underflows to zero
    return 0.5 - std::exp(std::log(0.5 * kPhi[3]) - kPhi[3]);
  return 0.5;  // corrections for i >= 5 sit far below double resolution
}

double osgood_partial_sum(int n) {
  if (n < 1) throw InvalidQuery("osgood_partial_sum: need n >= 1");
  double sum = 0.0;
  for (int i = 1; i <= n && i <= 4; ++i) sum += osgood_term(i);
  if (n > 4) sum += 0.5 * static_cast<double>(n - 4);
  return sum;
}

TowerReal log_f_at_phi(int i) {
  if (i < 0) throw InvalidQuery("log_f_at_phi: negative index");
  if (i <= 2) return {0, std::log(std::exp(kPhi[i]) - kPhi[i])};
  if (i == 3) return {0, kPhi[3] + std::log1p(-kPhi[3] * std::exp(-kPhi[3]))};
  // log(e^{phi_i} - phi_i) = phi_i up to a correction below resolution
  return phi_seq(i);
}

TowerReal growth_probe(double gamma, int i) {
  if (!(gamma >= 0.0)) throw InvalidQuery("growth_probe: gamma must be >= 0");
  if (i < 1) throw InvalidQuery("growth_probe: index must be >= 1");
  if (i <= 3) {
    // log phi_i = phi_{i-1} exactly, by construction
    return {0, log_f_at_phi(i).top - gamma * kPhi[i - 1]};
  }
  // log f(phi_i) - gamma*phi_{i-1}: the subtrahend is below the
  // representational resolution of the leading tower
  return phi_seq(i);
}

}  // namespace heatlab
