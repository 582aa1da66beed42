#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "heatlab/errors.hpp"
#include "heatlab/ode.hpp"
#include "heatlab/osgood.hpp"
#include "heatlab/source.hpp"

using namespace heatlab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kE = std::numbers::e;

}  // namespace

TEST_SUITE("osgood") {

TEST_CASE("tower normalization collapses into double range") {
  const TowerReal a = tower_normalize({1, 3.0});
  CHECK(a.depth == 0);
  CHECK(a.top == doctest::Approx(std::exp(3.0)).epsilon(1e-15));

  const TowerReal b = tower_normalize({2, 1.0});
  CHECK(b.depth == 0);
  CHECK(b.top == doctest::Approx(std::exp(kE)).epsilon(1e-15));

  const TowerReal c = tower_normalize({1, 700.0});
  CHECK(c.depth == 0);  // exp(700) still fits
  CHECK(std::isfinite(c.top));

  const TowerReal d = tower_normalize({1, 700.5});
  CHECK(d.depth == 1);
  CHECK(d.top == 700.5);

  CHECK_THROWS_AS(tower_normalize({-1, 2.0}), InvalidQuery);
}

TEST_CASE("tower comparison is a total order across depths") {
  CHECK(tower_compare({0, 2.0}, {0, 3.0}) == -1);
  CHECK(tower_compare({0, 3.0}, {0, 2.0}) == 1);
  CHECK(tower_compare({0, 2.0}, {0, 2.0}) == 0);
  CHECK(tower_compare({1, 2.0}, {0, std::exp(2.0)}) == 0);

  // one level apart: the shallower side can still win on magnitude
  CHECK(tower_compare({1, 800.0}, {0, 1e308}) == 1);
  CHECK(tower_compare({1, 701.0}, {0, 1e308}) == -1);
  CHECK(tower_compare({0, 1e308}, {1, 800.0}) == -1);

  // two or more levels apart the deeper side always wins
  CHECK(tower_compare({2, 701.0}, {0, 1e308}) == 1);
  CHECK(tower_compare({5, 800.0}, {4, 800.0}) == 1);
  CHECK(tower_compare({4, 800.0}, {5, 800.0}) == -1);
}

TEST_CASE("tower conversion to double saturates honestly") {
  CHECK(tower_to_double({0, 5.0}) == 5.0);
  CHECK(tower_to_double({1, 2.0}) == doctest::Approx(std::exp(2.0)));
  CHECK(tower_to_double({1, 710.0}) == kInf);
  CHECK(tower_to_double({2, 800.0}) == kInf);
  CHECK(tower_to_double({2, 1.0}) == doctest::Approx(std::exp(kE)));
}

TEST_CASE("tower rendering") {
  CHECK(tower_to_string({0, 1.5}) == "1.5");
  const std::string s = tower_to_string({2, 800.0});
  CHECK(s.find("exp^2(800") != std::string::npos);
}

TEST_CASE("doubly exponential sequence") {
  CHECK(phi_double(0) == 1.0);
  CHECK(phi_double(1) == kE);
  CHECK(phi_double(2) == 15.154262241479264);
  CHECK(phi_double(3) == 3814279.1047602207);
  CHECK_THROWS_AS(phi_double(4), InvalidQuery);
  CHECK_THROWS_AS(phi_double(-1), InvalidQuery);

  CHECK(phi_seq(2).depth == 0);
  CHECK(phi_seq(2).top == phi_double(2));
  const TowerReal p4 = phi_seq(4);
  CHECK(p4.depth == 1);
  CHECK(p4.top == phi_double(3));
  const TowerReal p7 = phi_seq(7);
  CHECK(p7.depth == 4);
  CHECK(p7.top == phi_double(3));
  CHECK_THROWS_AS(phi_seq(-1), InvalidQuery);

  // phi_{i+1} = e^{phi_i} holds across the double/tower boundary
  CHECK(tower_compare(phi_seq(4), {0, std::exp(700.0)}) == 1);
  CHECK(tower_compare(phi_seq(5), phi_seq(4)) == 1);
}

TEST_CASE("piecewise source values") {
  CHECK(bad_f_eval(0.0) == 0.0);
  CHECK(bad_f_eval(0.5) ==
        doctest::Approx(0.5 * (kE - 1.0)).epsilon(1e-15));
  CHECK(bad_f_eval(1.0) ==
        doctest::Approx(1.7182818284590452).epsilon(1e-15));
  CHECK(bad_f_eval(1.2) == doctest::Approx(kE - 1.0).epsilon(1e-15));
  CHECK(bad_f_eval(2.0) ==
        doctest::Approx(6.7718671076271633).epsilon(1e-13));
  CHECK(bad_f_eval(kE) ==
        doctest::Approx(12.435980413020219).epsilon(1e-15));
  CHECK(bad_f_eval(5.0) ==
        doctest::Approx(12.435980413020219).epsilon(1e-15));
  CHECK(bad_f_eval(phi_double(2)) ==
        doctest::Approx(3814263.9504979791).epsilon(1e-12));

  // the third ramp and everything beyond exceed double range
  CHECK(bad_f_eval(0.6 * phi_double(3)) == kInf);
  CHECK(bad_f_eval(phi_double(3)) == kInf);
  CHECK(bad_f_eval(1e308) == kInf);

  CHECK_THROWS_AS(bad_f_eval(-1.0), InvalidQuery);
}

TEST_CASE("piecewise source is continuous at representable breakpoints") {
  const auto ramp_slope = [](int i) {
    const double a = phi_double(i) - phi_double(i - 1);
    const double b = phi_double(i + 1) - phi_double(i);
    return (b - a) / (0.5 * phi_double(i));
  };
  const struct {
    double p;
    double slope;  // steepest adjacent piece
  } pts[] = {{1.0, kE - 1.0},
             {0.5 * kE, ramp_slope(1)},
             {kE, ramp_slope(1)},
             {0.5 * phi_double(2), ramp_slope(2)},
             {phi_double(2), ramp_slope(2)}};
  for (const auto& [p, slope] : pts) {
    const double delta = p * 1e-14;
    const double tol = 1.5 * slope * delta + 1e-12 * (1.0 + bad_f_eval(p));
    const double mid = bad_f_eval(p);
    CHECK(std::fabs(bad_f_eval(p - delta) - mid) <= tol);
    CHECK(std::fabs(bad_f_eval(p + delta) - mid) <= tol);
  }
  // at phi_3/2 only the left side stays finite
  const double h3 = 0.5 * phi_double(3);
  CHECK(bad_f_eval(h3) ==
        doctest::Approx(3814263.9504979791).epsilon(1e-12));
  CHECK(bad_f_eval(h3 * (1.0 - 1e-14)) == bad_f_eval(h3));
}

TEST_CASE("piecewise source is nondecreasing") {
  std::vector<double> grid;
  for (int k = 0; k <= 240; ++k)
    grid.push_back(std::pow(10.0, -2.0 + 8.7 * k / 240.0));
  double prev = 0.0;
  for (double s : grid) {
    const double v = bad_f_eval(s);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("segment classification") {
  CHECK(bad_f_segment(0.0) == 0);
  CHECK(bad_f_segment(0.999) == 0);
  CHECK(bad_f_segment(1.0) == 1);
  CHECK(bad_f_segment(0.5 * kE) == 1);
  CHECK(bad_f_segment(1.4) == -1);
  CHECK(bad_f_segment(kE) == 2);
  CHECK(bad_f_segment(7.0) == 2);
  CHECK(bad_f_segment(8.0) == -2);
  CHECK(bad_f_segment(phi_double(2)) == 3);
  CHECK(bad_f_segment(1e6) == 3);
  CHECK(bad_f_segment(2e6) == -3);
  CHECK(bad_f_segment(phi_double(3)) == 4);
  CHECK(bad_f_segment(1e300) == 4);
  CHECK_THROWS_AS(bad_f_segment(-0.5), InvalidQuery);
}

TEST_CASE("plateau crossing times") {
  CHECK(osgood_term(1) ==
        doctest::Approx(0.20901164656533679).epsilon(1e-15));
  CHECK(osgood_term(2) ==
        doctest::Approx(0.39070898561350823).epsilon(1e-15));
  CHECK(osgood_term(3) ==
        doctest::Approx(0.49999801347488819).epsilon(1e-15));
  CHECK(osgood_term(4) == 0.5);  // correction underflows
  CHECK(osgood_term(5) == 0.5);
  CHECK(osgood_term(100) == 0.5);
  for (int i = 1; i <= 3; ++i) {
    CHECK(osgood_term(i) > 0.0);
    CHECK(osgood_term(i) < 0.5);
  }
  CHECK(osgood_term(1) < osgood_term(2));
  CHECK(osgood_term(2) < osgood_term(3));
  CHECK(osgood_term(3) < osgood_term(4));
  CHECK_THROWS_AS(osgood_term(0), InvalidQuery);
}

TEST_CASE("partial sums of crossing times grow like n/2") {
  CHECK(osgood_partial_sum(1) == osgood_term(1));
  CHECK(osgood_partial_sum(2) ==
        doctest::Approx(0.59972063217884502).epsilon(1e-15));
  CHECK(osgood_partial_sum(3) ==
        doctest::Approx(1.0997186456537332).epsilon(1e-15));
  CHECK(osgood_partial_sum(50) ==
        doctest::Approx(24.599718645653733).epsilon(1e-15));
  CHECK(osgood_partial_sum(50) >= 24.0);
  CHECK(osgood_partial_sum(50) <= 25.0);
  CHECK_THROWS_AS(osgood_partial_sum(0), InvalidQuery);
}

TEST_CASE("log of the source at the sequence points") {
  CHECK(log_f_at_phi(1).depth == 0);
  CHECK(log_f_at_phi(1).top ==
        doctest::Approx(2.5205939171727694).epsilon(1e-15));
  CHECK(log_f_at_phi(3).depth == 0);
  CHECK(log_f_at_phi(3).top == phi_double(3));  // correction underflows
  const TowerReal l5 = log_f_at_phi(5);
  CHECK(l5.depth == phi_seq(5).depth);
  CHECK(l5.top == phi_seq(5).top);
  CHECK_THROWS_AS(log_f_at_phi(-1), InvalidQuery);
}

TEST_CASE("growth probes dominate every power") {
  CHECK(growth_probe(0.0, 1).depth == 0);
  CHECK(growth_probe(0.0, 1).top ==
        doctest::Approx(2.5205939171727694).epsilon(1e-15));
  CHECK(growth_probe(1.0, 2).top ==
        doctest::Approx(12.435976439977888).epsilon(1e-15));
  CHECK(growth_probe(10.0, 3).top ==
        doctest::Approx(3814127.5621378058).epsilon(1e-15));
  CHECK(growth_probe(100.0, 3).top ==
        doctest::Approx(3812763.6785360727).epsilon(1e-15));

  const TowerReal deep = growth_probe(100.0, 4);
  CHECK(deep.depth == 1);
  CHECK(deep.top == phi_double(3));

  for (double gamma : {0.0, 1.0, 5.0, 10.0, 100.0}) {
    TowerReal prev = growth_probe(gamma, 3);
    CHECK(tower_compare(prev, {0, 0.0}) == 1);
    for (int i = 4; i <= 8; ++i) {
      const TowerReal cur = growth_probe(gamma, i);
      CHECK(tower_compare(cur, prev) == 1);
      prev = cur;
    }
  }
  CHECK_THROWS_AS(growth_probe(-1.0, 3), InvalidQuery);
  CHECK_THROWS_AS(growth_probe(1.0, 0), InvalidQuery);
}

TEST_CASE("source kinds validate and evaluate") {
  const SourceFunction pow2 = make_source(FujitaPower{2.0});
  CHECK(source_eval(pow2, 3.0) == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(source_eval(pow2, 0.0) == 0.0);
  CHECK_THROWS_AS(make_source(FujitaPower{1.0}), InvalidQuery);
  CHECK_THROWS_AS(make_source(FujitaPower{0.5}), InvalidQuery);

  const SourceFunction bad = make_source(BadOsgood{});
  CHECK(source_eval(bad, 1.0) ==
        doctest::Approx(kE - 1.0).epsilon(1e-15));

  const SourceFunction tab =
      make_source(TableSource{{0.0, 1.0, 2.0}, {1.0, 2.0, 2.0}});
  CHECK(source_eval(tab, 0.0) == 1.0);
  CHECK(source_eval(tab, 0.5) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(source_eval(tab, 1.5) == 2.0);
  CHECK(source_eval(tab, 50.0) == 2.0);  // constant extension

  const SourceFunction one_pt = make_source(TableSource{{2.0}, {3.0}});
  CHECK(source_eval(one_pt, 0.0) == 3.0);
  CHECK(source_eval(one_pt, 10.0) == 3.0);

  CHECK_THROWS_AS(make_source(TableSource{{}, {}}), InvalidQuery);
  CHECK_THROWS_AS(make_source(TableSource{{0.0, 1.0}, {1.0}}), InvalidQuery);
  CHECK_THROWS_AS(make_source(TableSource{{1.0, 0.5}, {1.0, 2.0}}),
                  InvalidQuery);
  CHECK_THROWS_AS(make_source(TableSource{{0.0, 1.0}, {2.0, 1.0}}),
                  InvalidQuery);
  CHECK_THROWS_AS(make_source(TableSource{{0.0}, {-1.0}}), InvalidQuery);
  CHECK_THROWS_AS(make_source(TableSource{{-1.0, 1.0}, {0.0, 1.0}}),
                  InvalidQuery);
  CHECK_THROWS_AS(source_eval(pow2, -1.0), InvalidQuery);
}

TEST_CASE("integrator handles bland sources exactly") {
  const SourceFunction zero = make_source(TableSource{{0.0}, {0.0}});
  const OdeResult frozen = ode_integrate(zero, 2.0, 1.0);
  CHECK(!frozen.blew_up);
  CHECK(frozen.x_final == 2.0);

  const SourceFunction one = make_source(TableSource{{0.0}, {1.0}});
  const OdeResult linear = ode_integrate(one, 0.0, 2.0);
  CHECK(!linear.blew_up);
  CHECK(linear.x_final == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("quadratic growth blows up at the exact inverse-time") {
  const SourceFunction pow2 = make_source(FujitaPower{2.0});
  const OdeResult half = ode_integrate(pow2, 1.0, 0.5);
  CHECK(!half.blew_up);
  CHECK(half.x_final == doctest::Approx(2.0).epsilon(1e-6));

  const OdeResult burst = ode_integrate(pow2, 1.0, 2.0);
  CHECK(burst.blew_up);
  CHECK(burst.t_blowup > 0.99);
  CHECK(burst.t_blowup < 1.01);
}

TEST_CASE("plateau source stays finite over long horizons") {
  const SourceFunction bad = make_source(BadOsgood{});

  const OdeResult rest = ode_integrate(bad, 0.0, 3.0);
  CHECK(!rest.blew_up);
  CHECK(rest.x_final == 0.0);
  CHECK(rest.final_segment.value() == 0);
  CHECK(rest.time_in_final_segment.value() == doctest::Approx(3.0));

  const OdeResult slow = ode_integrate(bad, 1.0, 0.1);
  CHECK(!slow.blew_up);
  CHECK(slow.x_final ==
        doctest::Approx(1.0 + 0.1 * (kE - 1.0)).epsilon(1e-8));
  CHECK(slow.final_segment.value() == 1);
  CHECK(slow.time_in_final_segment.value() == doctest::Approx(0.1));
}

TEST_CASE("exact traversal from the third plateau") {
  const SourceFunction bad = make_source(BadOsgood{});
  const double x0 = phi_double(2);

  const OdeResult inside = ode_integrate(bad, x0, 0.25);
  CHECK(!inside.blew_up);
  CHECK(inside.final_segment.value() == 3);
  CHECK(inside.time_in_final_segment.value() == doctest::Approx(0.25));
  const double expect =
      phi_double(2) + (phi_double(3) - phi_double(2)) * 0.25;
  CHECK(inside.x_final == doctest::Approx(expect).epsilon(1e-14));

  const OdeResult five = ode_integrate(bad, x0, 5.0);
  CHECK(!five.blew_up);
  CHECK(five.final_segment.value() == 13);
  CHECK(five.time_in_final_segment.value() ==
        doctest::Approx(1.9865251118109915e-6).epsilon(1e-8));
  CHECK(five.x_final == kInf);
  CHECK(five.x_final_tower.depth >= 1);

  const OdeResult ten = ode_integrate(bad, x0, 10.0);
  CHECK(!ten.blew_up);
  CHECK(ten.final_segment.value() == 23);
  CHECK(ten.time_in_final_segment.value() ==
        doctest::Approx(1.9865251118109915e-6).epsilon(1e-6));
}

TEST_CASE("hybrid traversal hands over from the smooth regime") {
  const SourceFunction bad = make_source(BadOsgood{});
  const OdeResult res = ode_integrate(bad, 1.0, 5.0);
  CHECK(!res.blew_up);
  CHECK(res.final_segment.value() == 11);
  CHECK(res.time_in_final_segment.value() ==
        doctest::Approx(0.14925968902268738).epsilon(1e-5));
  CHECK(res.x_final == kInf);
}

TEST_CASE("integrator rejects bad queries") {
  const SourceFunction pow2 = make_source(FujitaPower{2.0});
  CHECK_THROWS_AS(ode_integrate(pow2, -1.0, 1.0), InvalidQuery);
  CHECK_THROWS_AS(ode_integrate(pow2, 1.0, 0.0), InvalidQuery);
  OdeOptions bad_opts;
  bad_opts.rel_tol = -1.0;
  CHECK_THROWS_AS(ode_integrate(pow2, 1.0, 1.0, bad_opts), InvalidQuery);
  const SourceFunction broken = TableSource{{1.0, 0.5}, {1.0, 2.0}};
  CHECK_THROWS_AS(ode_integrate(broken, 1.0, 1.0), InvalidQuery);
}

}  // TEST_SUITE
