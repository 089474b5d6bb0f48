#include <doctest.h>

#include <cmath>

#include "hessgame/datum.hpp"
#include "hessgame/domain.hpp"
#include "hessgame/errors.hpp"
#include "hessgame/grid_field.hpp"
#include "hessgame/sampling.hpp"

using namespace hessgame;

TEST_CASE("membership in catalog domains") {
  const auto ball = ImplicitDomain::ball({0, 0}, 1.0);
  CHECK(ball.inside(Vec{0, 0}));
  CHECK_FALSE(ball.inside(Vec{2, 0}));
  CHECK_FALSE(ball.inside(Vec{1, 0}));  // boundary counts as outside
  const auto half = ImplicitDomain::half_ball(3, 1.0, 2);
  CHECK_FALSE(half.inside(Vec{0, -0.1, 0}));
  CHECK(half.inside(Vec{0, 0.1, 0}));
  const auto two = ImplicitDomain::union_of_balls({{{0, 0, 1}, 1.4}, {{0, 0, -1}, 1.4}});
  CHECK(two.inside(Vec{0, 0, 2.2}));
  CHECK(two.inside(Vec{0.9, 0, 0}));
  CHECK_FALSE(two.inside(Vec{1.0, 0, 0}));
  const auto ell = ImplicitDomain::ellipsoid({0, 0, 0}, {2, 1, 1});
  CHECK(ell.inside(Vec{1.9, 0, 0}));
  CHECK_FALSE(ell.inside(Vec{0, 1.1, 0}));
  const auto cube = ImplicitDomain::box({-1, -1, -1}, {1, 1, 1});
  CHECK(cube.inside(Vec{0.99, -0.99, 0.5}));
  CHECK_FALSE(cube.inside(Vec{1.01, 0, 0}));
  const auto tri = ImplicitDomain::polytope(2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 1}});
  CHECK(tri.inside(tri.witness()));
  CHECK(tri.inside(Vec{0.2, 0.2}));
  CHECK_FALSE(tri.inside(Vec{0.6, 0.6}));
}

TEST_CASE("bounding boxes contain the domain samples") {
  const auto tri = ImplicitDomain::polytope(2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 1}});
  CHECK(tri.bounding_box().lo[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(tri.bounding_box().hi[1] == doctest::Approx(1.0).epsilon(1e-9));
  for (const Vec& p : tri.interior_samples()) CHECK(tri.bounding_box().contains(p));
  CHECK_THROWS_AS(ImplicitDomain::polytope(2, {{{-1, 0}, 0}, {{0, -1}, 0}}), InputError);
}

TEST_CASE("boundary strip") {
  const auto ball = ImplicitDomain::ball({0, 0}, 1.0);
  CHECK(ball.in_strip(Vec{1.001, 0}, 0.01));
  CHECK_FALSE(ball.in_strip(Vec{1.5, 0}, 0.01));
  CHECK_FALSE(ball.in_strip(Vec{0.5, 0}, 0.01));
}

TEST_CASE("exterior distance estimate on the unit ball") {
  const auto ball = ImplicitDomain::ball({0, 0, 0}, 1.0);
  const double eps = 0.05;
  Rng rng(17);
  for (int k = 0; k < 1000; ++k) {
    const Vec dir = random_unit_vector(3, rng);
    const double rad = uniform(rng, 1.0, 1.0 + 2 * eps);
    const Vec x = scaled(dir, rad);
    const double exact = std::abs(1.0 - norm(x));
    CHECK(std::abs(ball.exterior_distance(x, eps / 100.0) - exact) <= eps / 50.0);
    if (ball.in_strip(x, eps)) CHECK_FALSE(ball.inside(x));
  }
}

TEST_CASE("projection and bisection land on the boundary") {
  const auto ell = ImplicitDomain::ellipsoid({0, 0}, {2, 1});
  const Vec p = ell.project_to_boundary(Vec{1.0, 0.8});
  CHECK(std::abs(ell.level(p)) <= 1e-10);
  const Vec q = ell.bisect_crossing(Vec{0, 0}, Vec{3, 0}, 1e-12);
  CHECK(q[0] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK_FALSE(ell.inside(q));
}

TEST_CASE("field evaluation") {
  const Box box{{0, 0}, {1, 1}};
  GridField f(box, 0.25);
  for (std::size_t i = 0; i < f.size(); ++i) f.set_value(i, 3.5);
  CHECK(f.eval(Vec{0.37, 0.91}) == doctest::Approx(3.5));
  // affine data is reproduced anywhere
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Vec x = f.node_point(i);
    f.set_value(i, 2 * x[0] - 3 * x[1] + 0.5);
  }
  Rng rng(2);
  for (int k = 0; k < 100; ++k) {
    const Vec x{uniform01(rng), uniform01(rng)};
    CHECK(std::abs(f.eval(x) - (2 * x[0] - 3 * x[1] + 0.5)) < 1e-13);
  }
  CHECK_THROWS_AS(f.eval(Vec{1.5, 0.5}), InputError);

  GridField line(Box{{0}, {1}}, 1.0);
  line.set_value(0, 0.0);
  line.set_value(1, 1.0);
  CHECK(line.eval(Vec{0.5}) == doctest::Approx(0.5));
}

TEST_CASE("interpolation is monotone in node values") {
  GridField f(Box{{0, 0, 0}, {1, 1, 1}}, 0.25);
  Rng rng(4);
  for (std::size_t i = 0; i < f.size(); ++i) f.set_value(i, uniform(rng, -1, 1));
  GridField g = f;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t node = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(f.size())) % f.size();
    g.set_value(node, g.value(node) + uniform01(rng));
    const Vec x{uniform01(rng), uniform01(rng), uniform01(rng)};
    CHECK(g.eval(x) >= f.eval(x) - 1e-15);
    f = g;
  }
}

TEST_CASE("grid over a domain") {
  const auto ball = ImplicitDomain::ball({0, 0}, 1.0);
  const auto g = BoundaryDatum::affine({1, 2}, 0.5);
  const GridField f = GridField::on_domain(ball, 0.1, g, -7.0);
  std::size_t interior = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Vec x = f.node_point(i);
    CHECK(f.is_interior(i) == ball.inside(x));
    if (f.is_interior(i)) {
      ++interior;
      CHECK(f.value(i) == -7.0);
    } else {
      CHECK(f.value(i) == doctest::Approx(g(x)));
    }
  }
  CHECK(interior == f.interior_nodes().size());
  CHECK(interior > 250);
}

TEST_CASE("datum catalog") {
  const auto p = BoundaryDatum::polynomial({{1, {2, 0}}, {-1, {0, 2}}});
  CHECK(p(Vec{0.5, 0.25}) == doctest::Approx(0.25 - 0.0625));
  const auto peak = BoundaryDatum::peak({0, 0, 0}, 0.5, 1.0);
  CHECK(peak(Vec{0, 0, 0}) == 1.0);
  CHECK(peak(Vec{0.25, 0, 0}) == doctest::Approx(0.5));
  CHECK(peak(Vec{0, 0.6, 0}) == 0.0);
  CHECK(*peak.lipschitz() == doctest::Approx(2.0));
  CHECK(BoundaryDatum::constant(4)(Vec{1, 2}) == 4.0);
  CHECK(p.negated()(Vec{1, 0}) == -1.0);
}
