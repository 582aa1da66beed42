#pragma once

#include <string>

namespace heatlab {

// exp applied `depth` times to `top`; depth 0 is a plain double. Keeps
// quantities like exp(exp(3.8e6)) comparable without overflow.
struct TowerReal {
  int depth = 0;
  double top = 0.0;
};

// Collapses depth while the result stays in comfortable double range.
TowerReal tower_normalize(TowerReal v);

// Total order: -1, 0, +1.
int tower_compare(TowerReal a, TowerReal b);

// +inf when the value exceeds double range.
double tower_to_double(TowerReal v);

std::string tower_to_string(TowerReal v);

// The doubly exponential sequence phi_0 = 1, phi_{i+1} = e^{phi_i}.
// Exact doubles through i = 3; towers beyond.
TowerReal phi_seq(int i);

// phi_i as a double; throws InvalidQuery for i > 3 (out of double range).
double phi_double(int i);

// Piecewise source: (e-1)s on [0,1]; constant phi_i - phi_{i-1} on
// [phi_{i-1}, phi_i/2]; linear ramp on (phi_i/2, phi_i). Values past the
// third ramp exceed double range and come back as +inf.
double bad_f_eval(double s);

// Segment id containing s: 0 for [0,1); +i for the i-th plateau
// [phi_{i-1}, phi_i/2]; -i for the i-th ramp (phi_i/2, phi_i).
int bad_f_segment(double s);

// (phi_i/2 - phi_{i-1}) / (phi_i - phi_{i-1}): the time the ODE spends
// crossing the i-th plateau. Rounds to exactly 1/2 for i >= 4.
double osgood_term(int i);

// Sum of the first n plateau crossing times; grows like n/2.
double osgood_partial_sum(int n);

// log f(phi_i) = log(e^{phi_i} - phi_i), as a tower for large i.
TowerReal log_f_at_phi(int i);

// log(phi_i^{-gamma} f(phi_i)). Positive and increasing in i for every
// fixed gamma >= 0 once i is large enough.
TowerReal growth_probe(double gamma, int i);

}  // namespace heatlab
