#pragma once

#include <vector>

#include "heatlab/evolve.hpp"

namespace heatlab {

struct CertificateSample {
  double phi = 0.0;  // level
  double r = 0.0;    // largest certified radius
  double tau = 0.0;  // largest certified persistence time
};

// Empirical persistence-of-largeness record: for every sample with
// phi > phi_star, the evolution stays >= phi on the space-time region
// |x| <= sigma * phi^(-1/alpha), 0 <= t <= sigma * phi^(-2/alpha).
struct LargenessCertificate {
  double alpha = 0.0;
  double R = 0.0;
  double sigma = 0.0;
  double phi_star = 0.0;
  std::vector<CertificateSample> samples;
  std::vector<double> skipped_phis;  // thresholds that could not be certified
};

struct CertificateOptions {
  int x_points = 7;          // spatial grid on [0, r]
  int t_points = 6;          // log time grid on (0, tau]; t = 0 is exact
  double bisect_rel = 1e-2;  // relative resolution of both bisections
  double tau_max = 1.0;      // upper end of the persistence-time search
  EvolveOptions evolve{};
};

// Smallest level the search accepts: data exceeds phi only on radii below
// phi^(-1/alpha), and the search keeps that core inside half the support.
double certificate_phi_floor(const SingularData& d);

// For each threshold, bisects for the largest core persistence time and
// then the largest radius whose space-time box stays above the threshold;
// each accepted box is re-verified on a doubled grid (with a small shrink
// on failure). Thresholds that cannot be certified are reported in
// skipped_phis. Requires phis increasing and above certificate_phi_floor.
LargenessCertificate largeness_certificate(const EvolveDomain& dom,
                                           const SingularData& d,
                                           const std::vector<double>& phis,
                                           const CertificateOptions& opts = {});

// Worst value of min(w) - phi over every sample's certified sigma-region,
// sampled on a grid refined by the given factor. Nonnegative up to
// quadrature error when the certificate is sound.
double certificate_slack(const EvolveDomain& dom, const SingularData& d,
                         const LargenessCertificate& cert, int refine = 1,
                         const CertificateOptions& opts = {});

struct ScalingExponents {
  double p_r = 0.0;  // least-squares slope of log r against log phi
  double p_t = 0.0;  // least-squares slope of log tau against log phi
};

// Requires at least 4 samples spanning at least one decade in phi.
ScalingExponents fit_scaling_exponents(const LargenessCertificate& cert);

}  // namespace heatlab
