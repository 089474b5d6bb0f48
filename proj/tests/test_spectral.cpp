#include <doctest.h>

#include <cmath>

#include "hessgame/errors.hpp"
#include "hessgame/spectral.hpp"
#include "oracles.hpp"

using namespace hessgame;

namespace {

void check_close(const Vec& a, const Vec& b, double tol) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= tol);
}

}  // namespace

TEST_CASE("eigenvalues of simple matrices") {
  check_close(sym_eigenvalues(SymMatrix::diagonal(Vec{3, 1, 2})), {1, 2, 3}, 1e-14);
  check_close(sym_eigenvalues(SymMatrix::identity(4)), {1, 1, 1, 1}, 1e-14);
  check_close(sym_eigenvalues(SymMatrix::from_rows({{0, 1}, {1, 0}})), {-1, 1}, 1e-14);
}

TEST_CASE("eigenvalues agree with a dense reference solver") {
  Rng rng(11);
  for (std::size_t n = 2; n <= kMaxDim; ++n)
    for (int trial = 0; trial < 50; ++trial) {
      const SymMatrix m = oracle::random_sym(n, rng, 3.0);
      check_close(sym_eigenvalues(m), oracle::eigenvalues(m), 1e-11 * (1.0 + m.frobenius_norm()));
    }
}

TEST_CASE("eigenvectors diagonalise the matrix") {
  Rng rng(5);
  const SymMatrix m = oracle::random_sym(5, rng);
  const Eigensystem es = sym_eigensystem(m);
  for (std::size_t k = 0; k < 5; ++k) {
    const Vec mv = m.apply(es.vectors[k]);
    for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(mv[i] - es.values[k] * es.vectors[k][i]) < 1e-11);
    CHECK(std::abs(norm(es.vectors[k]) - 1.0) < 1e-12);
  }
  CHECK(es.sweeps <= 100);
}

TEST_CASE("shift moves every eigenvalue") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const SymMatrix m = oracle::random_sym(4, rng);
    const double c = uniform(rng, -5, 5);
    Vec expected = sym_eigenvalues(m);
    for (double& v : expected) v += c;
    check_close(sym_eigenvalues(m.shifted(c)), expected, 1e-10);
  }
}

TEST_CASE("orthogonal congruence preserves the spectrum") {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const SymMatrix m = oracle::random_sym(n, rng);
    const auto q = oracle::random_orthogonal(n, rng);
    check_close(sym_eigenvalues(m.congruence(q)), sym_eigenvalues(m), 1e-8);
  }
}

TEST_CASE("non-finite entries are rejected") {
  SymMatrix m = SymMatrix::identity(2);
  m.set(0, 1, std::nan(""));
  CHECK_THROWS_AS(sym_eigenvalues(m), InputError);
  CHECK_THROWS_AS(SymMatrix::from_rows({{1, 2}, {3, 1}}), InputError);
  CHECK_THROWS_AS(SymMatrix(9), InputError);
}

TEST_CASE("min-max and max-min on diagonal matrices") {
  const SamplingBudget budget;
  const SymMatrix d = SymMatrix::diagonal(Vec{1, 2, 3});
  CHECK(std::abs(lambda_j_minmax(d, 2, budget) - 2.0) < 1e-6);
  CHECK(std::abs(lambda_dual_maxmin(d, 2, budget) - 2.0) < 1e-6);
  CHECK(std::abs(lambda_dual_maxmin(SymMatrix::diagonal(Vec{-1, 5}), 1, budget) - 5.0) < 1e-6);
  CHECK_THROWS_AS(lambda_j_minmax(d, 0, budget), InputError);
  CHECK_THROWS_AS(lambda_j_minmax(d, 4, budget), InputError);
}

TEST_CASE("min-max over random matrices matches the reference spectrum") {
  Rng rng(21);
  SamplingBudget budget;
  for (std::size_t n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      const SymMatrix m = oracle::random_sym(n, rng);
      const Vec ref = oracle::eigenvalues(m);
      const double tol = 1e-3 * m.frobenius_norm();
      for (std::size_t j = 1; j <= n; ++j) {
        budget.seed = static_cast<std::uint64_t>(trial);
        CHECK(std::abs(lambda_j_minmax(m, j, budget) - ref[j - 1]) <= tol);
        CHECK(std::abs(lambda_dual_maxmin(m, j, budget) - ref[n - j]) <= tol);
      }
      // j = N: the only subspace is R^N, so the value is the top eigenvalue.
      CHECK(std::abs(lambda_j_minmax(m, n, budget) - ref[n - 1]) <= tol);
    }
}

TEST_CASE("Rayleigh quotient decomposes over the eigenbasis") {
  const SymMatrix d = SymMatrix::diagonal(Vec{1, 2});
  CHECK(rayleigh_decomposition_check(d, Vec{1, 0}) == doctest::Approx(1.0).epsilon(1e-14));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(rayleigh_decomposition_check(d, Vec{s, s}) == doctest::Approx(1.5).epsilon(1e-14));
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const SymMatrix m = oracle::random_sym(3, rng);
    const Vec v = random_unit_vector(3, rng);
    CHECK(std::abs(rayleigh_decomposition_check(m, v) - m.quadratic_form(v)) < 1e-12);
  }
  CHECK_THROWS_AS(rayleigh_decomposition_check(d, Vec{1, 1}), InputError);
}
