#pragma once

#include <limits>
#include <string>
#include <vector>

#include "heatlab/evolve.hpp"
#include "heatlab/geometry.hpp"
#include "heatlab/source.hpp"

namespace heatlab {

// Radial reaction-diffusion run: u_t = lap(u) + f(u) on the centred ball
// of radius domain.a in dimension n (1, 2, or 3), Dirichlet boundary,
// initial data min(cap, r^-alpha) supported on [0, data.R].
struct SimConfig {
  int n = 1;
  Interval domain{1.0};
  SingularData data{0.9, 0.5, 10.0};
  SourceFunction source = FujitaPower{2.0};
  int cells = 256;      // radial cells; at least 128
  double dt_init = 1e-9;
  double dt_max = 0.0;  // step ceiling; 0 picks t_end / 256
  double t_end = 1e-3;
  double u_max = 1e12;  // sup-norm threshold declared as blow-up
  int snapshots = 65;   // stored profiles, uniform in time, at least 2
  std::vector<double> caps = {10.0, 100.0, 1e3, 1e4};  // truncation ladder
};

// March history on the uniform grid r[j] = j a / cells. profiles[k] holds
// cells + 1 nodes (boundary included) at times[k]. A run that blows up or
// stalls stops early; t_final is the last time reached either way.
struct RadialTrajectory {
  std::vector<double> r;
  std::vector<double> times;
  std::vector<std::vector<double>> profiles;
  bool blew_up = false;
  bool stalled = false;
  double t_blowup = std::numeric_limits<double>::quiet_NaN();
  double t_final = 0.0;
  long long steps = 0;
};

// Implicit-diffusion, explicit-reaction march with the data truncated at
// cap. Adaptive step: growth-limited, halved on rejection, floored at
// machine scale. Throws InvalidQuery on a bad configuration.
RadialTrajectory simulate_radial(const SimConfig& cfg, double cap);

// Same march from an explicit initial profile on the grid nodes
// (cells + 1 values; the boundary entry is forced to zero).
RadialTrajectory simulate_radial(const SimConfig& cfg,
                                 std::vector<double> u0);

// Integral of u against the radial volume element over the centred ball
// of the given radius: trapezoid on the sample grid, clipped at radius.
double l1_mass(const std::vector<double>& r, const std::vector<double>& u,
               double radius, int n);

// Quadrature controls for duhamel_mass_bound.
struct FunctionalOptions {
  int s_per_decade = 16;  // geometric time nodes per decade
  int y_per_decade = 64;  // geometric space nodes per decade
  EvolveOptions evolve{};
};

// Lower bound for the ball mass of any mild solution at t_star: linear
// mass of the truncated data plus the Duhamel term with f applied to the
// linear evolution. One-dimensional only.
double duhamel_mass_bound(const SimConfig& cfg, double t_star,
                          const FunctionalOptions& opts = {});

struct CapRecord {
  double cap = 0.0;
  double mass_bound = 0.0;  // Duhamel functional at t_star
  double sim_mass = 0.0;    // simulated ball mass; +inf when the run blew up
  bool blew_up = false;
  double t_blowup = std::numeric_limits<double>::quiet_NaN();
  long long steps = 0;
};

struct BlowupReport {
  double t_star = 0.0;
  double q = 1.0;
  std::vector<CapRecord> records;  // one per cap, ascending
  double fitted_slope = 0.0;       // log mass_bound against log cap
  double theoretical_slope = 0.0;  // p - (n + 2)/alpha for power f, else NaN
  std::string regime;  // "nonexistence", "local-existence", or "unknown"
};

// Runs the truncation ladder at probe time t_star, one simulation plus one
// bound evaluation per cap, concurrently. Requires n == 1 and
// 0 < t_star <= min(eps^2, 1) with eps the clearance of the support ball.
BlowupReport blowup_experiment(const SimConfig& cfg, double t_star,
                               double q = 1.0,
                               const FunctionalOptions& opts = {});

// Sup over probe times and a grid subsample of the defect between the
// stored trajectory and its integral reconstruction from the stored
// history. Probe times must coincide with stored snapshot times. Requires
// n == 1 and a trajectory that neither blew up nor stalled.
double mild_residual(const RadialTrajectory& traj, const SimConfig& cfg,
                     const std::vector<double>& probe_times);

}  // namespace heatlab
