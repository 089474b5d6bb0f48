#include "hessgame/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hessgame/errors.hpp"

namespace hessgame {

namespace {

constexpr double kPivotTol = 1e-11;

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1), 0.0) {}

  double& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return t_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  // Row `rows_` is the reduced-cost row; its rhs holds -objective.
  double& cost(std::size_t c) { return at(rows_, c); }

  void pivot(std::size_t pr, std::size_t pc) {
    const double p = at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) /= p;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> t_;
};

// Runs simplex iterations over columns [0, active_cols). Bland's rule: the
// lowest-index improving column enters, ties in the ratio test go to the
// lowest-index basic variable.
LpStatus iterate(Tableau& t, std::vector<std::size_t>& basis, std::size_t active_cols,
                 int& pivots, int max_pivots) {
  for (;;) {
    std::size_t enter = active_cols;
    for (std::size_t c = 0; c < active_cols; ++c)
      if (t.cost(c) < -kPivotTol) {
        enter = c;
        break;
      }
    if (enter == active_cols) return LpStatus::optimal;
    if (pivots >= max_pivots) return LpStatus::iteration_limit;

    std::size_t leave = t.rows();
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, enter);
      if (a <= kPivotTol) continue;
      const double ratio = t.rhs(r) / a;
      if (ratio < best_ratio - 1e-14 ||
          (std::abs(ratio - best_ratio) <= 1e-14 && leave < t.rows() && basis[r] < basis[leave])) {
        best_ratio = ratio;
        leave = r;
      }
    }
    if (leave == t.rows()) return LpStatus::unbounded;
    t.pivot(leave, enter);
    basis[leave] = enter;
    ++pivots;
  }
}

}  // namespace

LpResult solve_standard_lp(const std::vector<Vec>& a, const Vec& b, const Vec& c, int max_pivots) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw InputError("LP: rhs size does not match constraint rows");
  for (const Vec& row : a)
    if (row.size() != n) throw InputError("LP: constraint row has wrong length");

  // Columns: n structural, then m artificials.
  Tableau t(m, n + m);
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const double sign = b[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t k = 0; k < n; ++k) t.at(r, k) = sign * a[r][k];
    t.at(r, n + r) = 1.0;
    t.rhs(r) = sign * b[r];
    basis[r] = n + r;
  }
  // Phase I objective: sum of artificials, expressed in non-basic terms.
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k < n; ++k) t.cost(k) -= t.at(r, k);
    t.rhs(m) -= t.rhs(r);
  }

  LpResult result;
  LpStatus st = iterate(t, basis, n + m, result.pivots, max_pivots);
  if (st == LpStatus::iteration_limit) {
    result.status = st;
    return result;
  }
  double scale = 1.0;
  for (double x : b) scale = std::max(scale, std::abs(x));
  if (-t.rhs(m) > 1e-9 * scale) {
    result.status = LpStatus::infeasible;
    return result;
  }

  // Drive remaining artificials out of the basis; rows that cannot pivot are redundant.
  std::vector<bool> redundant(m, false);
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) continue;
    std::size_t col = n;
    for (std::size_t k = 0; k < n; ++k)
      if (std::abs(t.at(r, k)) > 1e-9) {
        col = k;
        break;
      }
    if (col == n) {
      redundant[r] = true;
      continue;
    }
    t.pivot(r, col);
    basis[r] = col;
  }

  // Phase II costs.
  for (std::size_t k = 0; k <= n + m; ++k) t.at(m, k) = 0.0;
  for (std::size_t k = 0; k < n; ++k) t.cost(k) = c[k];
  for (std::size_t r = 0; r < m; ++r) {
    if (redundant[r] || basis[r] >= n) continue;
    const double cb = c[basis[r]];
    if (cb == 0.0) continue;
    for (std::size_t k = 0; k < n; ++k) t.cost(k) -= cb * t.at(r, k);
    t.rhs(m) -= cb * t.rhs(r);
  }
  // Redundant rows keep an artificial basic at value 0; zero them so they never pivot.
  for (std::size_t r = 0; r < m; ++r)
    if (redundant[r])
      for (std::size_t k = 0; k <= n + m; ++k) t.at(r, k) = 0.0;

  st = iterate(t, basis, n, result.pivots, max_pivots);
  result.status = st;
  if (st != LpStatus::optimal) return result;
  result.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (!redundant[r] && basis[r] < n) result.x[basis[r]] = t.rhs(r);
  result.objective = 0.0;
  for (std::size_t k = 0; k < n; ++k) result.objective += c[k] * result.x[k];
  return result;
}

}  // namespace hessgame
