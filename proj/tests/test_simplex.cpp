#include <doctest.h>

#include "hessgame/simplex.hpp"

using namespace hessgame;

TEST_CASE("small LP with a known optimum") {
  // min -x1 - 2 x2  s.t. x1 + x2 + s1 = 4, x1 + 3 x2 + s2 = 6
  // vertices: (0,0) (4,0) (0,2) (3,1); optimum at (3,1) with -5.
  const LpResult r = solve_standard_lp({{1, 1, 1, 0}, {1, 3, 0, 1}}, {4, 6}, {-1, -2, 0, 0});
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == doctest::Approx(-5.0));
  CHECK(r.x[0] == doctest::Approx(3.0));
  CHECK(r.x[1] == doctest::Approx(1.0));
}

TEST_CASE("infeasible and unbounded problems") {
  CHECK(solve_standard_lp({{1, 1}}, {-1}, {1, 1}).status == LpStatus::infeasible);
  CHECK(solve_standard_lp({{1, -1}}, {1}, {0, -1}).status == LpStatus::unbounded);
}

TEST_CASE("redundant and degenerate constraints") {
  // Same row twice plus a degenerate vertex at the origin.
  const LpResult r = solve_standard_lp({{1, 1, 1}, {2, 2, 2}, {1, -1, 0}}, {1, 2, 0}, {1, 1, 3});
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == doctest::Approx(1.0));
  CHECK(r.x[0] == doctest::Approx(0.5));
}

TEST_CASE("interpolation LP on a triangle") {
  // points (0,0) (1,0) (0,1) with values 0 1 2; query (0.25, 0.25) is the unique combination
  const LpResult r = solve_standard_lp({{0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, {0.25, 0.25, 1}, {0, 1, 2});
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == doctest::Approx(0.75));
}
