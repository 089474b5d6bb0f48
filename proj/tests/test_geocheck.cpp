#include <doctest.h>

#include <cmath>

#include "hessgame/errors.hpp"
#include "hessgame/geocheck.hpp"
#include "oracles.hpp"

using namespace hessgame;

namespace {

GeoBudget small_budget() {
  GeoBudget b;
  b.points = 150;
  b.subspaces = 20;
  b.directions = 40;
  return b;
}

// Curvature of the ellipse x^2/a^2 + y^2/b^2 = 1 at (a cos t, b sin t).
double ellipse_curvature(double a, double b, double t) {
  const double s = std::sin(t), c = std::cos(t);
  return a * b / std::pow(a * a * s * s + b * b * c * c, 1.5);
}

}  // namespace

TEST_CASE("principal curvatures of round and elliptic boundaries") {
  const auto sphere = ImplicitDomain::ball({0, 0, 0}, 2.0);
  const CurvatureReport rs = principal_curvatures(sphere, Vec{0, 0, 2});
  for (double k : rs.curvatures) CHECK(k == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(rs.normal[2] == doctest::Approx(1.0));

  // tips of the (2,1,1) ellipsoid: normal sections are ellipses
  const auto ell = ImplicitDomain::ellipsoid({0, 0, 0}, {2, 1, 1});
  const CurvatureReport tip = principal_curvatures(ell, Vec{2, 0, 0});
  CHECK(tip.curvatures[0] == doctest::Approx(ellipse_curvature(2, 1, 0)).epsilon(1e-4));
  CHECK(tip.curvatures[1] == doctest::Approx(ellipse_curvature(2, 1, 0)).epsilon(1e-4));
  const CurvatureReport side = principal_curvatures(ell, Vec{0, 1, 0});
  CHECK(side.curvatures[0] == doctest::Approx(ellipse_curvature(2, 1, M_PI / 2)).epsilon(1e-4));
  CHECK(side.curvatures[1] == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(std::abs(side.principal_directions[0][0]) == doctest::Approx(1.0).epsilon(1e-6));

  const auto e2 = ImplicitDomain::ellipsoid({0, 0}, {3, 1});
  for (double t : {0.1, 0.7, 1.3, 2.9}) {
    const Vec y{3 * std::cos(t), std::sin(t)};
    CHECK(principal_curvatures(e2, y).curvatures[0] == doctest::Approx(ellipse_curvature(3, 1, t)).epsilon(1e-4));
  }
}

TEST_CASE("flat faces, edges and off-boundary points") {
  const auto half = ImplicitDomain::half_ball(3, 1.0, 2);
  const CurvatureReport flat = principal_curvatures(half, Vec{0.2, 0, 0.1});
  for (double k : flat.curvatures) CHECK(std::abs(k) < 1e-6);
  CHECK_THROWS_AS(principal_curvatures(half, Vec{1, 0, 0}), SingularPointError);
  CHECK_THROWS_AS(principal_curvatures(half, Vec{0.2, 0.3, 0.1}), InputError);
}

TEST_CASE("condition H") {
  const auto ball = ImplicitDomain::ball({0, 0, 0}, 1.0);
  CHECK(check_H(ball, 2, Vec{0, 0, 1}));
  const auto half = ImplicitDomain::half_ball(3, 1.0, 2);
  CHECK_FALSE(check_H(half, 2, Vec{0, 0, 0}));
  CHECK_THROWS_AS(check_H(ball, 1, Vec{0, 0, 1}), ConfigError);
  CHECK_THROWS_AS(check_H(ball, 3, Vec{0, 0, 1}), ConfigError);
}

TEST_CASE("condition G on the catalog") {
  const auto half = ImplicitDomain::half_ball(3, 1.0, 2);
  const ConditionVerdict bad = check_G(half, 2, Vec{0, 0, 0}, 0.5, small_budget());
  CHECK(bad.status == VerdictStatus::violation);
  REQUIRE(bad.witness.has_value());
  CHECK(half.inside(bad.witness->x));
  CHECK(bad.witness->frame.size() == 2);
  CHECK(replay_G_witness(half, bad));

  const auto ball = ImplicitDomain::ball({0, 0, 0}, 1.0);
  for (std::size_t j = 1; j <= 3; ++j) {
    const ConditionVerdict v = check_G(ball, j, Vec{0, 0, 1}, 0.5, small_budget());
    CHECK(v.status == VerdictStatus::pass_at_budget);
    CHECK(v.passed_delta.has_value());
  }
  const auto two = ImplicitDomain::union_of_balls({{{0, 0, 1}, 1.4}, {{0, 0, -1}, 1.4}});
  const Vec waist{std::sqrt(1.4 * 1.4 - 1.0), 0, 0};
  CHECK(check_G(two, 2, waist, 0.5, small_budget()).status == VerdictStatus::pass_at_budget);

  const auto d = default_delta_schedule(0.5);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 0.25);
  CHECK(d[2] == 0.0625);
  CHECK_THROWS_AS(check_G(ball, 4, Vec{0, 0, 1}, 0.5), ConfigError);
}

TEST_CASE("line family from an interior point") {
  const auto ball = ImplicitDomain::ball({0, 0}, 1.0);
  std::size_t tested = 0;
  CHECK(line_family_hits(ball, Vec{0, 0.9}, {{1, 0}}, Vec{0, 1}, 0.5, 10, 1, &tested));
  CHECK(tested >= 1);
  // horizontal chord through the center is too far from the top point
  CHECK_FALSE(line_family_hits(ball, Vec{0, 0}, {{1, 0}}, Vec{0, 1}, 0.5, 10, 1));
}

TEST_CASE("condition F") {
  const auto ball = ImplicitDomain::ball({0, 0, 0}, 1.0);
  CHECK(check_F(ball, 2, Vec{0, 0, 1}, 0.5, small_budget()).status == VerdictStatus::pass_at_budget);
  const auto half = ImplicitDomain::half_ball(3, 1.0, 2);
  CHECK(check_F(half, 2, Vec{0, 0, 0}, 0.5, small_budget()).status == VerdictStatus::violation);
}

TEST_CASE("curvature barrier") {
  const Vec kappa{1.0, 2.0};
  const double eta = 0.1;
  CHECK(barrier_eval(kappa, 2, eta, Vec{0, 0, 0}) == 0.0);
  const SymMatrix hs = barrier_hessian(kappa, 2, eta);
  // second differences of the closed form along every axis pair
  const double s = 1e-3;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      Vec pp(3, 0.0), pm(3, 0.0), mp(3, 0.0), mm(3, 0.0);
      pp[a] += s, pp[b] += s;
      pm[a] += s, pm[b] -= s;
      mp[a] -= s, mp[b] += s;
      mm[a] -= s, mm[b] -= s;
      const double fd = (barrier_eval(kappa, 2, eta, pp) - barrier_eval(kappa, 2, eta, pm) -
                         barrier_eval(kappa, 2, eta, mp) + barrier_eval(kappa, 2, eta, mm)) /
                        (4 * s * s);
      CHECK(std::abs(fd - hs(a, b)) < 1e-6);
    }
  // every curvature exceeds eta, so the barrier is strictly concave
  CHECK(oracle::eigenvalues(hs)[2] < 0.0);
  CHECK_THROWS_AS(barrier_eval(kappa, 1, eta, Vec{0, 0, 0}), ConfigError);
  CHECK_THROWS_AS(barrier_eval(kappa, 2, 0.0, Vec{0, 0, 0}), InputError);
}

TEST_CASE("boundary point along a ray") {
  const auto ball = ImplicitDomain::ball({0, 0, 0}, 1.0);
  const Vec p = boundary_point_towards(ball, Vec{1, 1, 0});
  CHECK(p[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
  CHECK(std::abs(ball.level(p)) < 1e-9);
}
