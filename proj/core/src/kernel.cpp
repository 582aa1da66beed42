#include "heatlab/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace heatlab {

namespace {

constexpr double kPi = std::numbers::pi;

void check_time(double t) {
  if (!std::isfinite(t) || t < kTimeFloor) {
    throw InvalidQuery("time must be finite and at least the 1e-12 floor");
  }
}

void check_interval_args(const Interval& dom, double x, double y) {
  if (!std::isfinite(dom.a) || dom.a <= 0.0) {
    throw InvalidQuery("interval half-width must be finite and positive");
  }
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw InvalidQuery("kernel endpoints must be finite");
  }
  if (std::abs(x) > dom.a || std::abs(y) > dom.a) {
    throw InvalidQuery("kernel endpoint outside the closed interval");
  }
}

}  // namespace

void SeriesBudget::validate() const {
  if (!(tol > 0.0 && tol < 1.0)) {
    throw InvalidQuery("series tolerance must lie in (0, 1)");
  }
  if (k_max_cap < 1) {
    throw InvalidQuery("series index cap must be at least 1");
  }
}

double gaussian_kernel(std::size_t n, double dist, double t) {
  if (n < 1) throw InvalidQuery("dimension must be at least 1");
  check_time(t);
  if (!std::isfinite(dist)) throw InvalidQuery("distance must be finite");
  const double pref = std::pow(4.0 * kPi * t, -0.5 * static_cast<double>(n));
  return pref * std::exp(-dist * dist / (4.0 * t));
}

double gaussian_kernel(const GaussianParams& p) {
  if (p.x.size() != p.n || p.y.size() != p.n) {
    throw InvalidQuery("point dimension does not match the query dimension");
  }
  double s = 0.0;
  for (std::size_t j = 0; j < p.n; ++j) {
    if (!std::isfinite(p.x[j]) || !std::isfinite(p.y[j])) {
      throw InvalidQuery("kernel endpoints must be finite");
    }
    const double d = p.x[j] - p.y[j];
    s += d * d;
  }
  return gaussian_kernel(p.n, std::sqrt(s), p.t);
}

double interval_kernel_images(const Interval& dom, double x, double y,
                              double t, const SeriesBudget& b) {
  check_interval_args(dom, x, y);
  check_time(t);
  b.validate();

  const double a = dom.a;
  const double u = x - y;            // source separation, |u| <= 2a
  const double v = x + y + 2.0 * a;  // reflected separation, in [0, 4a]
  const double inv4t = 1.0 / (4.0 * t);
  const double worst = std::max(std::abs(u), v);

  double sum = 0.0;
  for (int k = 0;; ++k) {
    if (k == 0) {
      sum += std::exp(-u * u * inv4t) - std::exp(-v * v * inv4t);
    } else {
      const double off = 4.0 * a * static_cast<double>(k);
      const double up = u - off;
      const double um = u + off;
      const double vp = v - off;
      const double vm = v + off;
      sum += std::exp(-up * up * inv4t) + std::exp(-um * um * inv4t) -
             std::exp(-vp * vp * inv4t) - std::exp(-vm * vm * inv4t);
    }
    // Nearest source the truncation omits; the remaining shells shrink at
    // least geometrically, so a closed tail bound is available.
    const double d = 4.0 * a * static_cast<double>(k + 1) - worst;
    if (d > 0.0) {
      const double r = std::exp(-a * d / t);
      const double tail = 4.0 * std::exp(-d * d * inv4t) / (1.0 - r);
      if (tail < b.tol) break;
    }
    if (k + 1 > b.k_max_cap) {
      throw BudgetExhausted(
          "image series cap reached before the tail bound; "
          "t is too large for the image sum at this tolerance");
    }
  }
  const double val = sum / std::sqrt(4.0 * kPi * t);
  return val < 0.0 ? 0.0 : val;
}

double interval_kernel_eigen(const Interval& dom, double x, double y,
                             double t, const SeriesBudget& b) {
  check_interval_args(dom, x, y);
  check_time(t);
  b.validate();

  const double a = dom.a;
  const double theta = kPi * kPi * t / (4.0 * a * a);
  const double fx = (x + a) / (2.0 * a);
  const double fy = (y + a) / (2.0 * a);
  // Free-space magnitude in the units of the raw sine sum; keeps the stop
  // rule meaningful when the partial sum itself is vanishingly small.
  const double scale = a / std::sqrt(4.0 * kPi * t);

  double sum = 0.0;
  for (int k = 1;; ++k) {
    if (k > b.k_max_cap) {
      throw BudgetExhausted(
          "eigen series cap reached before the tail bound; "
          "t is too small for the eigenfunction series at this tolerance");
    }
    const double kk = static_cast<double>(k);
    const double env = std::exp(-theta * kk * kk);
    const double sx = std::sin(kPi * std::fmod(kk * fx, 2.0));
    const double sy = std::sin(kPi * std::fmod(kk * fy, 2.0));
    sum += env * sx * sy;

    const double kn = kk + 1.0;
    const double env_next = std::exp(-theta * kn * kn);
    const double ratio = std::exp(-theta * (2.0 * kn + 1.0));
    const double tail = env_next / (1.0 - ratio);
    if (tail < b.tol * std::max(std::abs(sum), scale)) break;
  }
  const double val = sum / a;
  return val < 0.0 ? 0.0 : val;
}

KernelMethod select_method(const Interval& dom, double t, double c_cross) {
  if (!std::isfinite(dom.a) || dom.a <= 0.0) {
    throw InvalidQuery("interval half-width must be finite and positive");
  }
  if (!std::isfinite(c_cross) || c_cross <= 0.0) {
    throw InvalidQuery("crossover constant must be finite and positive");
  }
  check_time(t);
  return t <= dom.a * dom.a * c_cross ? KernelMethod::Images
                                      : KernelMethod::Eigen;
}

double interval_kernel(const Interval& dom, double x, double y, double t,
                       const SeriesBudget& b, double c_cross) {
  return select_method(dom, t, c_cross) == KernelMethod::Images
             ? interval_kernel_images(dom, x, y, t, b)
             : interval_kernel_eigen(dom, x, y, t, b);
}

double box_kernel(const Box& dom, const std::vector<double>& x,
                  const std::vector<double>& y, double t,
                  const SeriesBudget& b, double c_cross) {
  validate(Domain{dom});
  const std::size_t n = dom.half_widths.size();
  if (x.size() != n || y.size() != n) {
    throw InvalidQuery("point dimension does not match the box dimension");
  }
  double prod = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    prod *= interval_kernel(Interval{dom.half_widths[j]}, x[j], y[j], t, b,
                            c_cross);
    if (prod == 0.0) return 0.0;
  }
  return prod;
}

double kernel(const Domain& dom, const std::vector<double>& x,
              const std::vector<double>& y, double t, const SeriesBudget& b,
              double c_cross) {
  if (const auto* iv = std::get_if<Interval>(&dom)) {
    if (x.size() != 1 || y.size() != 1) {
      throw InvalidQuery("point dimension does not match domain dimension");
    }
    return interval_kernel(*iv, x[0], y[0], t, b, c_cross);
  }
  return box_kernel(std::get<Box>(dom), x, y, t, b, c_cross);
}

namespace {

double mass_images(const Interval& dom, double x, double lo, double hi,
                   double t, const SeriesBudget& b) {
  const double a = dom.a;
  const double s2 = 2.0 * std::sqrt(t);
  const double worst_pos = std::max(std::abs(x - lo), std::abs(x - hi));
  const double worst_neg = x + hi + 2.0 * a;  // largest reflected separation
  const double worst = std::max(worst_pos, worst_neg);

  double sum = 0.0;
  for (int k = 0;; ++k) {
    const double offs[2] = {4.0 * a * static_cast<double>(k),
                            -4.0 * a * static_cast<double>(k)};
    const int reps = (k == 0) ? 1 : 2;
    for (int i = 0; i < reps; ++i) {
      const double off = offs[i];
      sum += 0.5 * (std::erf((x - lo - off) / s2) -
                    std::erf((x - hi - off) / s2));
      sum -= 0.5 * (std::erf((x + hi + 2.0 * a - off) / s2) -
                    std::erf((x + lo + 2.0 * a - off) / s2));
    }
    const double d = 4.0 * a * static_cast<double>(k + 1) - worst;
    if (d > 0.0) {
      const double r = std::exp(-a * d / t);
      const double tail = 2.0 * std::erfc(d / s2) / (1.0 - r);
      if (tail < b.tol) break;
    }
    if (k + 1 > b.k_max_cap) {
      throw BudgetExhausted(
          "image series cap reached while integrating the kernel; "
          "t is too large for the image sum at this tolerance");
    }
  }
  return std::clamp(sum, 0.0, 1.0);
}

double mass_eigen(const Interval& dom, double x, double lo, double hi,
                  double t, const SeriesBudget& b) {
  const double a = dom.a;
  const double theta = kPi * kPi * t / (4.0 * a * a);
  const double fx = (x + a) / (2.0 * a);
  const double fl = (lo + a) / (2.0 * a);
  const double fh = (hi + a) / (2.0 * a);

  double sum = 0.0;
  for (int k = 1;; ++k) {
    if (k > b.k_max_cap) {
      throw BudgetExhausted(
          "eigen series cap reached while integrating the kernel; "
          "t is too small for the eigenfunction series at this tolerance");
    }
    const double kk = static_cast<double>(k);
    const double env = std::exp(-theta * kk * kk);
    const double sx = std::sin(kPi * std::fmod(kk * fx, 2.0));
    const double cl = std::cos(kPi * std::fmod(kk * fl, 2.0));
    const double ch = std::cos(kPi * std::fmod(kk * fh, 2.0));
    sum += (2.0 / (kk * kPi)) * env * sx * (cl - ch);

    const double kn = kk + 1.0;
    const double env_next = std::exp(-theta * kn * kn);
    const double ratio = std::exp(-theta * (2.0 * kn + 1.0));
    const double tail = 4.0 * env_next / (kn * kPi * (1.0 - ratio));
    if (tail < b.tol) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

}  // namespace

double interval_kernel_mass(const Interval& dom, double x, double lo,
                            double hi, double t, const SeriesBudget& b,
                            double c_cross) {
  check_interval_args(dom, x, x);
  check_time(t);
  b.validate();
  if (!(lo <= hi)) throw InvalidQuery("integration range is reversed");
  if (lo < -dom.a || hi > dom.a) {
    throw InvalidQuery("integration range must sit inside the interval");
  }
  if (lo == hi) return 0.0;
  return select_method(dom, t, c_cross) == KernelMethod::Images
             ? mass_images(dom, x, lo, hi, t, b)
             : mass_eigen(dom, x, lo, hi, t, b);
}

}  // namespace heatlab
