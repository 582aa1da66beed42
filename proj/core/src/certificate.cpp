#include "heatlab/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heatlab/errors.hpp"

namespace heatlab {
namespace {

// Minimum of the evolution over the box |x| <= r, 0 <= t <= tau, sampled
// on x_points * refine equispaced radii and t_points * refine log-spaced
// times. The t = 0 slice is the data itself, whose minimum on [0, r] sits
// at radius r.
double region_min(const EvolveDomain& dom, const SingularData& d, double r,
                  double tau, const CertificateOptions& opts, int refine) {
  const int nx = opts.x_points * refine;
  const int nt = opts.t_points * refine;
  double lowest = singular_data_eval(d, r);
  for (int i = 0; i < nx; ++i) {
    const double x = r * static_cast<double>(i) / (nx - 1);
    for (int j = 0; j < nt; ++j) {
      const double frac = static_cast<double>(j) / (nt - 1);
      const double t = tau * std::pow(1e-3, 1.0 - frac);
      if (t < kTimeFloor) continue;
      lowest =
          std::min(lowest, evolve_singular(dom, d, x, t, opts.evolve));
    }
  }
  return lowest;
}

}  // namespace

double certificate_phi_floor(const SingularData& d) {
  return std::pow(0.5 * d.R, -d.alpha);
}

LargenessCertificate largeness_certificate(const EvolveDomain& dom,
                                           const SingularData& d,
                                           const std::vector<double>& phis,
                                           const CertificateOptions& opts) {
  validate(dom, d);
  if (phis.empty())
    throw InvalidQuery("largeness_certificate: no thresholds given");
  if (opts.x_points < 2 || opts.t_points < 2 || !(opts.bisect_rel > 0.0) ||
      !(opts.tau_max > 0.0))
    throw InvalidQuery("largeness_certificate: bad search options");

  LargenessCertificate cert;
  cert.alpha = d.alpha;
  cert.R = d.R;
  cert.phi_star = certificate_phi_floor(d);
  double prev = cert.phi_star;
  for (double phi : phis) {
    if (!(phi > prev))
      throw InvalidQuery(
          "largeness_certificate: thresholds must be increasing and exceed "
          "the phi floor");
    prev = phi;
  }

  const double inv_alpha = 1.0 / d.alpha;
  for (double phi : phis) {
    if (phi >= d.cap) {  // the evolution never reaches a level above the cap
      cert.skipped_phis.push_back(phi);
      continue;
    }
    const double x_core = 0.5 * std::pow(phi, -inv_alpha);
    auto feasible = [&](double r, double tau, int refine) {
      return region_min(dom, d, r, tau, opts, refine) >= phi;
    };

    double tau_lo = std::max(1e-6 * std::pow(phi, -2.0 * inv_alpha),
                             10.0 * kTimeFloor);
    if (!feasible(x_core, tau_lo, 1)) {
      cert.skipped_phis.push_back(phi);
      continue;
    }
    double tau = 0.0;
    if (feasible(x_core, opts.tau_max, 1)) {
      tau = opts.tau_max;
    } else {
      double hi = opts.tau_max;
      double lo = tau_lo;
      while (hi > lo * (1.0 + opts.bisect_rel)) {
        const double mid = std::sqrt(hi * lo);
        (feasible(x_core, mid, 1) ? lo : hi) = mid;
      }
      tau = lo;
    }

    double r = x_core;
    double r_hi = std::min(std::pow(phi, -inv_alpha), d.R);
    if (feasible(r_hi, tau, 1)) {
      r = r_hi;
    } else {
      double lo = x_core;
      double hi = r_hi;
      while (hi - lo > lo * opts.bisect_rel) {
        const double mid = 0.5 * (hi + lo);
        (feasible(mid, tau, 1) ? lo : hi) = mid;
      }
      r = lo;
    }

    // Accept only boxes that survive a doubled grid, shrinking a little
    // when the coarse search overshot.
    bool sound = false;
    for (int iter = 0; iter < 60; ++iter) {
      if (feasible(r, tau, 2)) {
        sound = true;
        break;
      }
      r *= 0.97;
      tau *= 0.95;
    }
    if (!sound) {
      cert.skipped_phis.push_back(phi);
      continue;
    }
    cert.samples.push_back({phi, r, tau});
  }

  cert.sigma = std::numeric_limits<double>::infinity();
  for (const CertificateSample& s : cert.samples) {
    const double by_r = s.r * std::pow(s.phi, inv_alpha);
    const double by_t = s.tau * std::pow(s.phi, 2.0 * inv_alpha);
    cert.sigma = std::min(cert.sigma, std::min(by_r, by_t));
  }
  if (cert.samples.empty()) cert.sigma = 0.0;
  return cert;
}

double certificate_slack(const EvolveDomain& dom, const SingularData& d,
                         const LargenessCertificate& cert, int refine,
                         const CertificateOptions& opts) {
  if (cert.samples.empty())
    throw InvalidQuery("certificate_slack: certificate has no samples");
  if (refine < 1) throw InvalidQuery("certificate_slack: refine must be >= 1");
  double worst = std::numeric_limits<double>::infinity();
  for (const CertificateSample& s : cert.samples) {
    const double r = cert.sigma * std::pow(s.phi, -1.0 / d.alpha);
    const double tau = cert.sigma * std::pow(s.phi, -2.0 / d.alpha);
    worst = std::min(worst,
                     region_min(dom, d, r, tau, opts, refine) - s.phi);
  }
  return worst;
}

ScalingExponents fit_scaling_exponents(const LargenessCertificate& cert) {
  const std::size_t n = cert.samples.size();
  if (n < 4)
    throw InvalidQuery("fit_scaling_exponents: need at least 4 samples");
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const CertificateSample& s : cert.samples) {
    lo = std::min(lo, s.phi);
    hi = std::max(hi, s.phi);
  }
  if (!(hi >= 10.0 * lo))
    throw InvalidQuery(
        "fit_scaling_exponents: thresholds must span at least a decade");

  double mean_u = 0.0, mean_r = 0.0, mean_t = 0.0;
  for (const CertificateSample& s : cert.samples) {
    mean_u += std::log(s.phi);
    mean_r += std::log(s.r);
    mean_t += std::log(s.tau);
  }
  mean_u /= static_cast<double>(n);
  mean_r /= static_cast<double>(n);
  mean_t /= static_cast<double>(n);
  double suu = 0.0, sur = 0.0, sut = 0.0;
  for (const CertificateSample& s : cert.samples) {
    const double du = std::log(s.phi) - mean_u;
    suu += du * du;
    sur += du * (std::log(s.r) - mean_r);
    sut += du * (std::log(s.tau) - mean_t);
  }
  if (!(suu > 0.0))
    throw InvalidQuery("fit_scaling_exponents: degenerate regression");
  return {sur / suu, sut / suu};
}

}  // namespace heatlab
