#include "heatlab/semilinear.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>
#include <variant>

#include "heatlab/errors.hpp"
#include "heatlab/kernel.hpp"

namespace heatlab {
namespace {

void validate_base(const SimConfig& cfg, const char* who) {
  std::ostringstream msg;
  msg << who << ": ";
  if (cfg.n < 1 || cfg.n > 3) {
    msg << "dimension must be 1, 2, or 3";
    throw InvalidQuery(msg.str());
  }
  if (!(cfg.domain.a > 0.0) || !std::isfinite(cfg.domain.a)) {
    msg << "ball radius must be finite and positive";
    throw InvalidQuery(msg.str());
  }
  if (!(cfg.data.alpha > 0.0) || !(cfg.data.alpha < cfg.n)) {
    msg << "data exponent must satisfy 0 < alpha < n";
    throw InvalidQuery(msg.str());
  }
  if (!(cfg.data.R > 0.0) || !(cfg.data.R < cfg.domain.a)) {
    msg << "data support must sit strictly inside the ball";
    throw InvalidQuery(msg.str());
  }
  if (cfg.cells < 128) {
    msg << "need at least 128 radial cells";
    throw InvalidQuery(msg.str());
  }
  if (!(cfg.dt_init > 0.0) || !std::isfinite(cfg.dt_init)) {
    msg << "dt_init must be finite and positive";
    throw InvalidQuery(msg.str());
  }
  if (cfg.dt_max < 0.0 || !std::isfinite(cfg.dt_max)) {
    msg << "dt_max must be finite and nonnegative";
    throw InvalidQuery(msg.str());
  }
  if (!(cfg.t_end > 0.0) || !std::isfinite(cfg.t_end)) {
    msg << "t_end must be finite and positive";
    throw InvalidQuery(msg.str());
  }
  if (!(cfg.u_max > 0.0)) {
    msg << "u_max must be positive";
    throw InvalidQuery(msg.str());
  }
  if (cfg.snapshots < 2) {
    msg << "need at least two snapshots";
    throw InvalidQuery(msg.str());
  }
  validate(cfg.source);
}

void validate_cap(const SimConfig& cfg, double cap, const char* who) {
  const double floor = std::pow(cfg.data.R, -cfg.data.alpha);
  if (!(cap > floor) || !std::isfinite(cap)) {
    std::ostringstream msg;
    msg << who << ": cap must be finite and exceed R^-alpha = " << floor;
    throw InvalidQuery(msg.str());
  }
}

// Solves the tridiagonal system in place; dd is the diagonal, dl/du the
// bands. Diagonal dominance is guaranteed by the assembly.
void thomas(std::vector<double>& dl, std::vector<double>& dd,
            std::vector<double>& du, std::vector<double>& rhs,
            std::vector<double>& x) {
  const int m = static_cast<int>(dd.size());
  for (int i = 1; i < m; ++i) {
    const double w = dl[i] / dd[i - 1];
    dd[i] -= w * du[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  x[m - 1] = rhs[m - 1] / dd[m - 1];
  for (int i = m - 2; i >= 0; --i) {
    x[i] = (rhs[i] - du[i] * x[i + 1]) / dd[i];
  }
}

RadialTrajectory march(const SimConfig& cfg, std::vector<double> u) {
  const int J = cfg.cells;
  const double h = cfg.domain.a / J;
  const double inv_h2 = 1.0 / (h * h);

  RadialTrajectory out;
  out.r.resize(J + 1);
  for (int j = 0; j <= J; ++j) out.r[j] = j * h;

  // Radial Laplacian bands, scaled by dt at assembly time. The first row
  // uses the symmetry limit 2n (u_1 - u_0) / h^2; the drift term keeps the
  // off-diagonals nonpositive for n <= 3, so the implicit matrix is an
  // M-matrix and the solve preserves nonnegativity.
  std::vector<double> lo(J, 0.0), hi(J, 0.0);
  hi[0] = 2.0 * cfg.n * inv_h2;
  for (int j = 1; j < J; ++j) {
    const double drift = (cfg.n - 1) / (2.0 * h * out.r[j]);
    lo[j] = inv_h2 - drift;
    hi[j] = inv_h2 + drift;
  }

  auto store = [&](double t) {
    std::vector<double> p(u.begin(), u.end());
    p.push_back(0.0);
    out.times.push_back(t);
    out.profiles.push_back(std::move(p));
  };

  const int S = cfg.snapshots;
  const double dt_cap = cfg.dt_max > 0.0 ? cfg.dt_max : cfg.t_end / 256.0;
  double t = 0.0;
  double dt_ctrl = std::min(cfg.dt_init, dt_cap);
  int next = 1;
  store(0.0);

  std::vector<double> dl(J), dd(J), du(J), rhs(J), unew(J);
  while (next < S) {
    if (out.steps > 20'000'000LL) {
      throw NumericFailure("simulate_radial: step budget exhausted");
    }
    const double t_next = cfg.t_end * next / (S - 1);
    const bool hits = dt_ctrl >= t_next - t;
    const double dt = hits ? t_next - t : dt_ctrl;
    const bool on_floor = dt <= 1e-15 * std::max(1.0, t);

    double sup_old = 0.0;
    for (int j = 0; j < J; ++j) {
      sup_old = std::max(sup_old, std::abs(u[j]));
      rhs[j] = u[j] + dt * source_eval(cfg.source, std::max(u[j], 0.0));
    }
    dl[0] = 0.0;
    dd[0] = 1.0 + dt * hi[0];
    du[0] = -dt * hi[0];
    for (int j = 1; j < J; ++j) {
      dl[j] = -dt * lo[j];
      dd[j] = 1.0 + 2.0 * dt * inv_h2;
      du[j] = -dt * hi[j];
    }
    thomas(dl, dd, du, rhs, unew);

    bool finite = true;
    double sup_new = 0.0;
    double min_new = 0.0;
    for (int j = 0; j < J; ++j) {
      if (!std::isfinite(unew[j])) {
        finite = false;
        break;
      }
      sup_new = std::max(sup_new, std::abs(unew[j]));
      min_new = std::min(min_new, unew[j]);
    }
    const bool ok = finite && (sup_old <= 1e-300 || sup_new <= 1.1 * sup_old);
    if (!ok && !on_floor) {
      dt_ctrl = dt * 0.5;
      continue;
    }
    if (!finite) {
      out.stalled = true;
      out.t_final = t;
      return out;
    }
    ++out.steps;
    u.swap(unew);
    t = hits ? t_next : t + dt;
    if (min_new < -1e-13 * std::max(1.0, sup_new)) {
      throw NumericFailure(
          "simulate_radial: implicit solve produced a negative profile");
    }
    if (sup_new > cfg.u_max) {
      out.blew_up = true;
      out.t_blowup = t;
      out.t_final = t;
      return out;
    }
    if (hits) {
      store(t);
      ++next;
    }
    dt_ctrl = std::min(dt_ctrl * 1.25, dt_cap);
  }
  out.t_final = t;
  return out;
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    sum += 0.5 * (y[i] + y[i + 1]) * (x[i + 1] - x[i]);
  }
  return sum;
}

std::vector<double> geometric_grid(double lo, double hi, int per_decade) {
  const int count =
      std::max(2, static_cast<int>(std::ceil(std::log10(hi / lo) *
                                             per_decade)) + 1);
  std::vector<double> g(count);
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) g[i] = lo * std::exp(step * i);
  g.front() = lo;
  g.back() = hi;
  return g;
}

// Mass of the Dirichlet kernel started at y over the window [-R, R]; the
// short-time limit is the indicator of the window.
double window_mass(const Interval& dom, double y, double R, double tau) {
  if (tau <= kTimeFloor) {
    if (y < R) return 1.0;
    if (y == R) return 0.5;
    return 0.0;
  }
  return interval_kernel_mass(dom, y, -R, R, tau);
}

}  // namespace

RadialTrajectory simulate_radial(const SimConfig& cfg, double cap) {
  validate_base(cfg, "simulate_radial");
  validate_cap(cfg, cap, "simulate_radial");
  SingularData d = cfg.data;
  d.cap = cap;
  std::vector<double> u(cfg.cells);
  const double h = cfg.domain.a / cfg.cells;
  for (int j = 0; j < cfg.cells; ++j) {
    u[j] = singular_data_eval(d, j * h);
  }
  return march(cfg, std::move(u));
}

RadialTrajectory simulate_radial(const SimConfig& cfg,
                                 std::vector<double> u0) {
  validate_base(cfg, "simulate_radial");
  if (static_cast<int>(u0.size()) != cfg.cells + 1) {
    throw InvalidQuery(
        "simulate_radial: initial profile must have cells + 1 nodes");
  }
  for (double v : u0) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidQuery(
          "simulate_radial: initial profile must be finite and nonnegative");
    }
  }
  u0.pop_back();
  return march(cfg, std::move(u0));
}

double l1_mass(const std::vector<double>& r, const std::vector<double>& u,
               double radius, int n) {
  if (n < 1 || n > 3) {
    throw InvalidQuery("l1_mass: dimension must be 1, 2, or 3");
  }
  if (r.size() != u.size() || r.size() < 2) {
    throw InvalidQuery("l1_mass: need matching sample arrays of length >= 2");
  }
  if (!(radius > 0.0)) {
    throw InvalidQuery("l1_mass: radius must be positive");
  }
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    if (!(r[i + 1] > r[i])) {
      throw InvalidQuery("l1_mass: radii must increase strictly");
    }
  }
  const double omega =
      n == 1 ? 2.0 : (n == 2 ? 2.0 * std::numbers::pi : 4.0 * std::numbers::pi);
  auto shell = [&](double rr, double uu) {
    return omega * std::pow(rr, n - 1) * uu;
  };
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    if (r[i] >= radius) break;
    if (r[i + 1] <= radius) {
      sum += 0.5 * (shell(r[i], u[i]) + shell(r[i + 1], u[i + 1])) *
             (r[i + 1] - r[i]);
    } else {
      const double w = (radius - r[i]) / (r[i + 1] - r[i]);
      const double uc = u[i] + w * (u[i + 1] - u[i]);
      sum += 0.5 * (shell(r[i], u[i]) + shell(radius, uc)) * (radius - r[i]);
      break;
    }
  }
  return sum;
}

double duhamel_mass_bound(const SimConfig& cfg, double t_star,
                          const FunctionalOptions& opts) {
  if (cfg.n != 1) {
    throw OutOfValidity("duhamel_mass_bound: only n = 1 is supported");
  }
  validate_base(cfg, "duhamel_mass_bound");
  validate_cap(cfg, cfg.data.cap, "duhamel_mass_bound");
  if (!(t_star > 0.0) || !std::isfinite(t_star)) {
    throw InvalidQuery("duhamel_mass_bound: probe time must be positive");
  }
  if (opts.s_per_decade < 2 || opts.y_per_decade < 2) {
    throw InvalidQuery("duhamel_mass_bound: grid densities must be >= 2");
  }
  const Interval dom{cfg.domain.a};
  const EvolveDomain edom = dom;
  const SingularData& d = cfg.data;

  // Linear mass over the ball at the probe time.
  const int mass_pts = 257;
  std::vector<double> xs(mass_pts);
  for (int i = 0; i < mass_pts; ++i) xs[i] = d.R * i / (mass_pts - 1);
  const std::vector<double> w_star =
      evolve_profile(edom, d, xs, t_star, opts.evolve);
  const double mass = 2.0 * trapezoid(xs, w_star);

  // Space grid for the Duhamel term: geometric backbone with the support
  // edge and the truncation corner pinned, origin prepended.
  std::vector<double> ys =
      geometric_grid(1e-7 * cfg.domain.a, cfg.domain.a, opts.y_per_decade);
  const double y_corner = std::pow(d.cap, -1.0 / d.alpha);
  if (y_corner > ys.front() && y_corner < cfg.domain.a) {
    ys.push_back(y_corner);
  }
  ys.push_back(d.R);
  ys.insert(ys.begin(), 0.0);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  // Time grid: geometric with s = 0 prepended; the initial slice uses the
  // data itself.
  const double s_lo = std::max(2e-12, 1e-11 * t_star);
  std::vector<double> ss = geometric_grid(s_lo, t_star, opts.s_per_decade);
  ss.insert(ss.begin(), 0.0);

  std::vector<double> g(ss.size(), 0.0);
  std::vector<double> integrand(ys.size(), 0.0);
  for (std::size_t k = 0; k < ss.size(); ++k) {
    const double s = ss[k];
    const double tau = t_star - s;
    std::vector<double> w;
    if (s == 0.0) {
      w.resize(ys.size());
      for (std::size_t i = 0; i < ys.size(); ++i) {
        w[i] = singular_data_eval(d, ys[i]);
      }
    } else {
      w = evolve_profile(edom, d, ys, s, opts.evolve);
    }
    for (std::size_t i = 0; i < ys.size(); ++i) {
      integrand[i] = source_eval(cfg.source, std::max(w[i], 0.0)) *
                     window_mass(dom, ys[i], d.R, tau);
    }
    g[k] = 2.0 * trapezoid(ys, integrand);
  }
  return mass + trapezoid(ss, g);
}

BlowupReport blowup_experiment(const SimConfig& cfg, double t_star, double q,
                               const FunctionalOptions& opts) {
  if (cfg.n != 1) {
    throw OutOfValidity("blowup_experiment: only n = 1 is supported");
  }
  validate_base(cfg, "blowup_experiment");
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw InvalidQuery("blowup_experiment: q must be finite and positive");
  }
  const double eps = cfg.domain.a - cfg.data.R;
  const double horizon = std::min(eps * eps, 1.0);
  if (!(t_star > 0.0) || !(t_star <= horizon)) {
    std::ostringstream msg;
    msg << "blowup_experiment: probe time must lie in (0, " << horizon << "]";
    throw InvalidQuery(msg.str());
  }
  if (cfg.caps.empty()) {
    throw InvalidQuery("blowup_experiment: need at least one cap");
  }
  for (std::size_t i = 0; i < cfg.caps.size(); ++i) {
    validate_cap(cfg, cfg.caps[i], "blowup_experiment");
    if (i > 0 && !(cfg.caps[i] > cfg.caps[i - 1])) {
      throw InvalidQuery("blowup_experiment: caps must increase strictly");
    }
  }

  auto run_one = [&cfg, t_star, &opts](double cap) {
    SimConfig local = cfg;
    local.data.cap = cap;
    local.t_end = t_star;
    CapRecord rec;
    rec.cap = cap;
    rec.mass_bound = duhamel_mass_bound(local, t_star, opts);
    const RadialTrajectory traj = simulate_radial(local, cap);
    rec.blew_up = traj.blew_up;
    rec.t_blowup = traj.t_blowup;
    rec.steps = traj.steps;
    if (traj.blew_up || traj.stalled) {
      rec.sim_mass = std::numeric_limits<double>::infinity();
    } else {
      rec.sim_mass = l1_mass(traj.r, traj.profiles.back(), cfg.data.R, 1);
    }
    return rec;
  };

  std::vector<std::future<CapRecord>> jobs;
  jobs.reserve(cfg.caps.size());
  for (double cap : cfg.caps) {
    jobs.push_back(std::async(std::launch::async, run_one, cap));
  }
  BlowupReport rep;
  rep.t_star = t_star;
  rep.q = q;
  for (auto& job : jobs) rep.records.push_back(job.get());

  const std::size_t m = rep.records.size();
  if (m >= 2) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const CapRecord& rec : rep.records) {
      const double x = std::log(rec.cap);
      const double y = std::log(rec.mass_bound);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    rep.fitted_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  } else {
    rep.fitted_slope = std::numeric_limits<double>::quiet_NaN();
  }

  rep.theoretical_slope = std::numeric_limits<double>::quiet_NaN();
  rep.regime = "unknown";
  if (const auto* pf = std::get_if<FujitaPower>(&cfg.source)) {
    const double alpha = cfg.data.alpha;
    const double n = cfg.n;
    rep.theoretical_slope = pf->p - (n + 2.0) / alpha;
    if (pf->p * alpha > n + 2.0 && alpha < n / q) {
      rep.regime = "nonexistence";
    } else if (pf->p < 1.0 + 2.0 * q / n ||
               (pf->p == 1.0 + 2.0 * q / n && q == 1.0)) {
      rep.regime = "local-existence";
    }
  }
  return rep;
}

double mild_residual(const RadialTrajectory& traj, const SimConfig& cfg,
                     const std::vector<double>& probe_times) {
  if (cfg.n != 1) {
    throw OutOfValidity("mild_residual: only n = 1 is supported");
  }
  if (traj.blew_up || traj.stalled) {
    throw InvalidQuery("mild_residual: trajectory is incomplete");
  }
  if (traj.times.size() < 3 || traj.profiles.size() != traj.times.size()) {
    throw InvalidQuery("mild_residual: need at least three stored profiles");
  }
  if (probe_times.empty()) {
    throw InvalidQuery("mild_residual: need at least one probe time");
  }
  const int J = cfg.cells;
  if (static_cast<int>(traj.r.size()) != J + 1) {
    throw InvalidQuery("mild_residual: trajectory grid disagrees with config");
  }
  const Interval dom{cfg.domain.a};
  const double a = cfg.domain.a;

  // Fine quadrature grid: 4x oversampling, with stored profiles extended
  // by linear interpolation (every fourth node is a stored node).
  const int F = 4 * J;
  std::vector<double> ys(F + 1);
  for (int i = 0; i <= F; ++i) ys[i] = a * i / F;
  const double hf = a / F;
  auto refine = [&](const std::vector<double>& coarse) {
    std::vector<double> fine(F + 1);
    for (int i = 0; i <= F; ++i) {
      const int j = i / 4;
      const int frac = i - 4 * j;
      if (frac == 0) {
        fine[i] = coarse[j];
      } else {
        fine[i] = coarse[j] + (coarse[j + 1] - coarse[j]) * (frac / 4.0);
      }
    }
    return fine;
  };

  // Folded Dirichlet propagation of fine-grid values to the point x.
  auto propagate = [&](const std::vector<double>& fine, double tau,
                       double x) {
    double sum = 0.0;
    for (int i = 0; i <= F; ++i) {
      const double k = interval_kernel(dom, x, ys[i], tau) +
                       interval_kernel(dom, x, -ys[i], tau);
      const double w = (i == 0 || i == F) ? 0.5 : 1.0;
      sum += w * fine[i] * k;
    }
    return sum * hf;
  };

  const std::vector<double> u0_fine = refine(traj.profiles[0]);
  std::vector<std::vector<double>> f_fine(traj.times.size());

  const int stride = std::max(1, J / 64);
  double worst = 0.0;
  for (double tp : probe_times) {
    int k = -1;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      if (std::abs(traj.times[i] - tp) <= 1e-9 * cfg.t_end) {
        k = static_cast<int>(i);
        break;
      }
    }
    if (k < 1) {
      throw InvalidQuery(
          "mild_residual: probe time must match a stored positive snapshot");
    }
    for (int i = 0; i <= k; ++i) {
      if (f_fine[i].empty()) {
        f_fine[i] = refine(traj.profiles[i]);
        for (double& v : f_fine[i]) {
          v = source_eval(cfg.source, std::max(v, 0.0));
        }
      }
    }
    const std::vector<double>& uk = traj.profiles[k];
    for (int j = 0; j < J; j += stride) {
      const double x = traj.r[j];
      const double lin = propagate(u0_fine, tp, x);
      double duh = 0.0;
      double prev = 0.0;
      for (int i = 0; i <= k; ++i) {
        const double tau = tp - traj.times[i];
        const double vi = (i == k)
                              ? source_eval(cfg.source, std::max(uk[j], 0.0))
                              : propagate(f_fine[i], tau, x);
        if (i > 0) {
          duh += 0.5 * (prev + vi) * (traj.times[i] - traj.times[i - 1]);
        }
        prev = vi;
      }
      worst = std::max(worst, std::abs(uk[j] - (lin + duh)));
    }
  }
  return worst;
}

}  // namespace heatlab
