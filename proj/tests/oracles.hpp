#pragma once

// Reference computations for the tests, independent of the library code
// they check.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hessgame/linalg.hpp"
#include "hessgame/rng.hpp"
#include "hessgame/spectral.hpp"

namespace oracle {

using hessgame::Vec;

inline Eigen::MatrixXd dense(const hessgame::SymMatrix& m) {
  Eigen::MatrixXd a(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t k = 0; k < m.dim(); ++k) a(i, k) = m(i, k);
  return a;
}

// Ascending eigenvalues by Eigen's self-adjoint solver.
inline Vec eigenvalues(const hessgame::SymMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(m), Eigen::EigenvaluesOnly);
  Vec out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) out[i] = es.eigenvalues()[static_cast<Eigen::Index>(i)];
  return out;
}

inline hessgame::SymMatrix random_sym(std::size_t n, hessgame::Rng& rng, double scale = 1.0) {
  hessgame::SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k) m.set(i, k, scale * hessgame::uniform(rng, -1.0, 1.0));
  return m;
}

// Random orthogonal matrix from a QR factorisation of a Gaussian matrix.
inline std::vector<Vec> random_orthogonal(std::size_t n, hessgame::Rng& rng) {
  Eigen::MatrixXd g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) g(i, k) = hessgame::gaussian(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  std::vector<Vec> rows(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) rows[i][k] = q(i, k);
  return rows;
}

// Second differences of a quadratic in 2-d: Hessian entries of u(x,y).
template <class F>
Eigen::Matrix2d fd_hessian2(F u, double x, double y, double s = 1e-3) {
  Eigen::Matrix2d h;
  h(0, 0) = (u(x + s, y) - 2 * u(x, y) + u(x - s, y)) / (s * s);
  h(1, 1) = (u(x, y + s) - 2 * u(x, y) + u(x, y - s)) / (s * s);
  h(0, 1) = h(1, 0) = (u(x + s, y + s) - u(x + s, y - s) - u(x - s, y + s) + u(x - s, y - s)) / (4 * s * s);
  return h;
}

// Lower convex hull of (t_i, v_i) evaluated at t, by brute force over pairs.
inline double convex_hull_1d(const std::vector<double>& t, const std::vector<double>& v, double x) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (t[a] == x) best = std::min(best, v[a]);
    for (std::size_t b = 0; b < t.size(); ++b) {
      if (!(t[a] < x && x < t[b])) continue;
      const double w = (x - t[a]) / (t[b] - t[a]);
      best = std::min(best, (1 - w) * v[a] + w * v[b]);
    }
  }
  return best;
}

}  // namespace oracle
