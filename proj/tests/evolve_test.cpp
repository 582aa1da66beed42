#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "heatlab/bounds.hpp"
#include "heatlab/errors.hpp"
#include "heatlab/evolve.hpp"
#include "heatlab/kernel.hpp"

using namespace heatlab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool near(double got, double want, double tol) {
  return std::fabs(got - want) <= tol * (1.0 + std::fabs(want));
}

}  // namespace

TEST_SUITE("evolve") {

TEST_CASE("initial data is the capped power law on its support") {
  SingularData d{0.5, 0.5, 1000.0};
  CHECK(singular_data_eval(d, 0.0) == 1000.0);
  CHECK(singular_data_eval(d, 1e-8) == 1000.0);
  CHECK(near(singular_data_eval(d, 1e-5), 316.22776601683796, 1e-14));
  CHECK(singular_data_eval(d, 0.25) == 2.0);
  CHECK(near(singular_data_eval(d, 0.5), std::sqrt(2.0), 1e-15));
  CHECK(singular_data_eval(d, 0.6) == 0.0);
  SingularData unbounded{0.5, 0.5, kInf};
  CHECK(singular_data_eval(unbounded, 0.0) == kInf);
  CHECK_THROWS_AS(singular_data_eval(d, -0.1), InvalidQuery);
}

TEST_CASE("configuration validation") {
  const EvolveDomain iv = Interval{1.0};
  CHECK_THROWS_AS(validate(iv, SingularData{0.0, 0.5, kInf}), InvalidQuery);
  CHECK_THROWS_AS(validate(iv, SingularData{1.0, 0.5, kInf}), InvalidQuery);
  CHECK_THROWS_AS(validate(iv, SingularData{0.5, 1.0, kInf}), InvalidQuery);
  CHECK_THROWS_AS(validate(iv, SingularData{0.5, -0.5, kInf}), InvalidQuery);
  // cap must exceed R^-alpha = sqrt(2)
  CHECK_THROWS_AS(validate(iv, SingularData{0.5, 0.5, std::sqrt(2.0)}),
                  InvalidQuery);
  CHECK_NOTHROW(validate(iv, SingularData{0.5, 0.5, 1.5}));
  const EvolveDomain f4 = FreeSpace{4};
  CHECK_THROWS_AS(validate(f4, SingularData{0.5, 0.5, kInf}), InvalidQuery);
  const EvolveDomain f2 = FreeSpace{2};
  CHECK_NOTHROW(validate(f2, SingularData{1.5, 0.5, kInf}));
  CHECK_THROWS_AS(validate(f2, SingularData{2.0, 0.5, kInf}), InvalidQuery);
}

TEST_CASE("Dirichlet interval evolution matches high-precision quadrature") {
  // values computed independently at 40-digit precision
  const EvolveDomain dom = Interval{1.0};
  SingularData d{0.5, 0.5, 1000.0};
  struct Row {
    double x, t, w;
  };
  const Row rows[] = {
      {0.00, 1e-3, 8.1159147730323900},
      {0.25, 1e-3, 2.0259628827905943},
      {0.50, 0.02, 0.96262799770961882},
      {0.80, 0.10, 0.50137744039297791},
      {0.00, 0.24, 1.4773837354017575},
  };
  for (const Row& r : rows) {
    CAPTURE(r.x);
    CAPTURE(r.t);
    CHECK(near(evolve_singular(dom, d, r.x, r.t), r.w, 1e-7));
  }
}

TEST_CASE("free-space evolution matches high-precision quadrature") {
  SingularData half{0.5, 0.5, kInf};
  CHECK(near(evolve_singular(FreeSpace{1}, half, 0.25, 0.01),
             2.4872623967579734, 1e-7));
  CHECK(near(evolve_singular(FreeSpace{1}, half, 0.3, 1e-8),
             1.8257420104957825, 1e-7));
  CHECK(near(evolve_singular(FreeSpace{2}, SingularData{0.7, 0.5, kInf}, 0.3,
                             0.01),
             2.2994546409453034, 1e-7));
  SingularData d3{1.2, 0.5, kInf};
  CHECK(near(evolve_singular(FreeSpace{3}, d3, 0.4, 0.02),
             2.0799263515586749, 1e-7));
  CHECK(near(evolve_singular(FreeSpace{3}, d3, 0.0, 0.005),
             12.608479851720846, 1e-7));
}

TEST_CASE("short times recover the initial data away from the singularity") {
  SingularData d{0.5, 0.5, kInf};
  const double w = evolve_singular(FreeSpace{1}, d, 0.3, 1e-8);
  const double data = singular_data_eval(d, 0.3);
  CHECK(std::fabs(w / data - 1.0) <= 1e-3);
}

TEST_CASE("evolution is even in x on the interval") {
  const EvolveDomain dom = Interval{1.0};
  SingularData d{0.5, 0.5, kInf};
  const double wp = evolve_singular(dom, d, 0.3, 0.01);
  const double wm = evolve_singular(dom, d, -0.3, 0.01);
  CHECK(std::fabs(wp - wm) <= 1e-12 * wp);
}

TEST_CASE("Dirichlet evolution sits below the free-space evolution") {
  SingularData d{0.5, 0.5, 1000.0};
  for (auto [x, t] : {std::pair{0.25, 0.01}, std::pair{0.5, 0.05}}) {
    const double wd = evolve_singular(Interval{1.0}, d, x, t);
    const double wf = evolve_singular(FreeSpace{1}, d, x, t);
    CHECK(wd <= wf * (1.0 + 1e-9));
    CHECK(wd > 0.0);
  }
}

TEST_CASE("evolution grows with the cap") {
  const double x = 0.1, t = 1e-3;
  double prev = 0.0;
  for (double cap : {500.0, 2000.0, kInf}) {
    const double w =
        evolve_singular(FreeSpace{1}, SingularData{0.5, 0.5, cap}, x, t);
    CHECK(w >= prev - 1e-12);
    prev = w;
  }
  CHECK(prev > 0.0);
}

TEST_CASE("total mass never exceeds the initial mass") {
  const EvolveDomain dom = Interval{1.0};
  SingularData d{0.5, 0.5, kInf};
  const double t = 0.01;
  const int n = 800;
  double mass = 0.0;
  double prev = evolve_singular(dom, d, -1.0, t);
  for (int i = 1; i <= n; ++i) {
    const double x = -1.0 + 2.0 * i / n;
    const double cur = evolve_singular(dom, d, x, t);
    mass += 0.5 * (prev + cur) * (2.0 / n);
    prev = cur;
  }
  const double mass0 = 2.8284271247461901;
  CHECK(mass <= mass0 + 1e-6);
  CHECK(mass > 2.7);
}

TEST_CASE("evolution dominates the convolved all-time lower bound") {
  const EvolveDomain dom = Interval{1.0};
  SingularData d{0.5, 0.5, kInf};
  const double x = 0.2, t = 0.05;
  const int n = 2000;
  double lower = 0.0;
  for (int i = 0; i < n; ++i) {
    const double rho = (i + 0.5) * d.R / n;
    double sum = 0.0;
    for (double y : {rho, -rho}) {
      const SegmentClearance eps =
          segment_clearance(Domain{Interval{1.0}}, {x}, {y});
      sum += all_time_bound(1, eps, {x}, {y}, t);
    }
    lower += singular_data_eval(d, rho) * sum * (d.R / n);
  }
  const double w = evolve_singular(dom, d, x, t);
  CHECK(w >= lower - 1e-6);
  CHECK(lower > 0.0);
}

TEST_CASE("far from the support the evolution vanishes") {
  SingularData d{0.5, 0.5, kInf};
  CHECK(evolve_singular(FreeSpace{1}, d, 10.0, 1e-4) == 0.0);
}

TEST_CASE("profile evaluation matches pointwise evaluation") {
  const EvolveDomain dom = Interval{1.0};
  SingularData d{0.5, 0.5, 1000.0};
  const std::vector<double> xs = {-0.5, 0.0, 0.3};
  const auto prof = evolve_profile(dom, d, xs, 0.01);
  REQUIRE(prof.size() == xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    CHECK(prof[i] == evolve_singular(dom, d, xs[i], 0.01));
}

TEST_CASE("evolution rejects bad queries") {
  const EvolveDomain dom = Interval{1.0};
  SingularData d{0.5, 0.5, kInf};
  CHECK_THROWS_AS(evolve_singular(dom, d, 0.0, 1e-13), InvalidQuery);
  CHECK_THROWS_AS(evolve_singular(dom, d, 1.5, 0.01), InvalidQuery);
  CHECK(evolve_singular(dom, d, 1.0, 0.01) == 0.0);
  CHECK(evolve_singular(dom, d, -1.0, 0.01) == 0.0);
}

TEST_CASE("time grid shape") {
  const auto ts = time_grid(0.25, {});
  REQUIRE(ts.size() == 25);
  CHECK(ts.front() == 0.0);
  CHECK(ts.back() == 0.25);
  CHECK(near(ts[1], 2.5e-7, 1e-12));
  for (std::size_t i = 1; i < ts.size(); ++i) CHECK(ts[i] > ts[i - 1]);
  CHECK_THROWS_AS(time_grid(0.0, {}), InvalidQuery);
  CHECK_THROWS_AS(time_grid(1.0, TimeGridSpec{1, 1e-6}), InvalidQuery);
  CHECK_THROWS_AS(time_grid(1.0, TimeGridSpec{24, 1.5}), InvalidQuery);
}

TEST_CASE("grid infimum of the free evolution on the support sphere") {
  // frozen from the same 40-digit quadrature as the spot values
  SingularData d{0.5, 0.5, kInf};
  const auto res = infimum_M(Domain{Interval{1.0}}, d);
  CHECK(res.T == 0.25);
  CHECK(near(res.M, 0.70750625479671704, 1e-6));
  CHECK(res.M < singular_data_eval(d, d.R));
}

TEST_CASE("grid infimum works for a square cross-section") {
  SingularData d{0.7, 0.5, kInf};
  const auto res = infimum_M(Domain{Box{{1.0, 1.0}}}, d);
  CHECK(near(res.T, 0.125, 1e-15));
  CHECK(res.M > 0.0);
  CHECK(res.M <= std::pow(0.5, -0.7) * (1.0 + 1e-9));
}

TEST_CASE("grid infimum rejects support touching the boundary") {
  SingularData d{0.5, 1.0, kInf};
  CHECK_THROWS_AS(infimum_M(Domain{Interval{1.0}}, d), InvalidQuery);
}

}  // TEST_SUITE
