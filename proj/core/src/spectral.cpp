#include "hessgame/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hessgame/errors.hpp"

namespace hessgame {

SymMatrix::SymMatrix(std::size_t n) : n_(n), data_(n * (n + 1) / 2, 0.0) {
  if (n < 1 || n > kMaxDim) throw InputError("SymMatrix dimension must lie in [1, 8]");
}

SymMatrix SymMatrix::from_rows(const std::vector<Vec>& rows) {
  SymMatrix m(rows.size());
  double scale = 0.0;
  for (const Vec& r : rows) {
    if (r.size() != rows.size()) throw InputError("matrix rows must be square");
    for (double x : r) scale = std::max(scale, std::abs(x));
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > 1e-12 * std::max(1.0, scale))
        throw InputError("matrix is not symmetric");
      m.set(i, j, rows[i][j]);
    }
  return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
  SymMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
  return std::sqrt(s);
}

bool SymMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

Vec SymMatrix::apply(std::span<const double> v) const {
  Vec out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

double SymMatrix::quadratic_form(std::span<const double> v) const { return dot(apply(v), v); }

SymMatrix SymMatrix::shifted(double c) const {
  SymMatrix m = *this;
  for (std::size_t i = 0; i < n_; ++i) m.set(i, i, (*this)(i, i) + c);
  return m;
}

SymMatrix SymMatrix::congruence(const std::vector<Vec>& q_rows) const {
  if (q_rows.size() != n_) throw InputError("congruence needs a square matrix of matching size");
  // (Q^T M Q)_{ab} = sum_{ik} Q_{ia} M_{ik} Q_{kb}
  SymMatrix out(n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a; b < n_; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) s += q_rows[i][a] * (*this)(i, k) * q_rows[k][b];
      out.set(a, b, s);
    }
  return out;
}

Eigensystem sym_eigensystem(const SymMatrix& m) {
  if (!m.all_finite()) throw InputError("matrix has non-finite entries");
  const std::size_t n = m.dim();
  std::vector<Vec> a(n, Vec(n));
  std::vector<Vec> v(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    v[i][i] = 1.0;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  const double threshold = 1e-13 * m.frobenius_norm();
  const auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a[i][j] * a[i][j];
    return std::sqrt(s);
  };

  int sweeps = 0;
  while (sweeps < 100 && off_norm() > threshold) {
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        // Rotation angle from the classical stable formulation.
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x][x] < a[y][y]; });
  Eigensystem es;
  es.sweeps = sweeps;
  for (std::size_t k : order) {
    es.values.push_back(a[k][k]);
    Vec col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[i][k];
    es.vectors.push_back(std::move(col));
  }
  return es;
}

Vec sym_eigenvalues(const SymMatrix& m) {
  Eigensystem es = sym_eigensystem(m);
  const double tr = m.trace();
  const double sum = std::accumulate(es.values.begin(), es.values.end(), 0.0);
  if (std::abs(sum - tr) > 1e-10 * (1.0 + std::abs(tr)))
    throw InvariantError("eigenvalues do not reproduce the trace");
  return std::move(es.values);
}

namespace {

void check_index(const SymMatrix& m, std::size_t j) {
  if (j < 1 || j > m.dim()) throw InputError("eigenvalue index j must lie in [1, N]");
}

std::vector<SubspaceFrame> seeded_frames(const SymMatrix& m, std::size_t j, const Eigensystem& es,
                                         bool lowest, const SamplingBudget& budget) {
  const std::size_t n = m.dim();
  std::vector<Vec> seed_basis;
  for (std::size_t k = 0; k < j; ++k) seed_basis.push_back(es.vectors[lowest ? k : n - 1 - k]);
  std::vector<SubspaceFrame> frames;
  frames.push_back(SubspaceFrame::orthonormalize(n, std::move(seed_basis)));
  if (j == n) return frames;
  for (SubspaceFrame& f : coordinate_frames(n, j)) frames.push_back(std::move(f));
  Rng rng(sub_seed(budget.seed, 0x5eed));
  for (std::size_t k = 0; k < budget.frames; ++k) frames.push_back(random_frame(n, j, rng));
  return frames;
}

}  // namespace

double lambda_j_minmax(const SymMatrix& m, std::size_t j, const SamplingBudget& budget) {
  check_index(m, j);
  const Eigensystem es = sym_eigensystem(m);
  const auto frames = seeded_frames(m, j, es, true, budget);
  return frame_search(frames, budget.directions, Orientation::min_max, true, budget.seed,
                      [&](std::span<const double> v) { return m.quadratic_form(v); })
      .value;
}

double lambda_dual_maxmin(const SymMatrix& m, std::size_t j, const SamplingBudget& budget) {
  check_index(m, j);
  const Eigensystem es = sym_eigensystem(m);
  const auto frames = seeded_frames(m, j, es, false, budget);
  return frame_search(frames, budget.directions, Orientation::max_min, true, budget.seed,
                      [&](std::span<const double> v) { return m.quadratic_form(v); })
      .value;
}

double rayleigh_decomposition_check(const SymMatrix& m, std::span<const double> v) {
  if (v.size() != m.dim()) throw InputError("vector dimension does not match matrix");
  if (std::abs(norm(v) - 1.0) > 1e-12) throw InputError("rayleigh check needs a unit vector");
  const double direct = m.quadratic_form(v);
  const Eigensystem es = sym_eigensystem(m);
  double spectral = 0.0;
  for (std::size_t i = 0; i < es.values.size(); ++i) {
    const double a = dot(es.vectors[i], v);
    spectral += a * a * es.values[i];
  }
  const double scale = 1.0 + m.frobenius_norm();
  if (std::abs(direct - spectral) > 1e-10 * scale)
    throw InvariantError("Rayleigh quotient disagrees with its eigen-decomposition");
  return direct;
}

}  // namespace hessgame
