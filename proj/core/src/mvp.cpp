#include "hessgame/mvp.hpp"

#include <cmath>

#include "hessgame/errors.hpp"
#include "hessgame/spectral.hpp"

namespace hessgame {

double mvp_residual(const SmoothTestFunction& f, std::span<const double> x, double eps, std::size_t j,
                    const SamplingBudget& budget, Orientation orientation) {
  const std::size_t n = f.dim();
  if (x.size() != n) throw InputError("point has wrong dimension");
  if (j < 1 || j > n) throw ConfigError("index j must lie in [1, N]");
  if (!(eps > 0.0)) throw InputError("eps must be positive");

  const Eigensystem es = sym_eigensystem(fd_hessian(f, x, 1e-3));
  std::vector<Vec> seed;
  for (std::size_t k = 0; k < j; ++k)
    seed.push_back(orientation == Orientation::min_max ? es.vectors[k] : es.vectors[n - 1 - k]);
  std::vector<SubspaceFrame> frames{SubspaceFrame::orthonormalize(n, seed)};
  for (SubspaceFrame& fr : coordinate_frames(n, j)) frames.push_back(std::move(fr));
  Rng rng(sub_seed(budget.seed, 0x5eed));
  for (std::size_t k = 0; k < budget.frames; ++k) frames.push_back(random_frame(n, j, rng));

  Vec d(n);
  const auto half_sd = [&](std::span<const double> v) {
    for (std::size_t i = 0; i < n; ++i) d[i] = eps * v[i];
    return 0.5 * f.second_difference(x, d);
  };
  return frame_search(frames, budget.directions, orientation, true, budget.seed, half_sd).value;
}

ExpansionTable expansion_convergence(const SmoothTestFunction& f, std::span<const double> x, std::size_t j,
                                     std::span<const double> schedule, const SamplingBudget& budget,
                                     Orientation orientation) {
  if (schedule.empty()) throw InputError("empty eps schedule");
  for (std::size_t k = 1; k < schedule.size(); ++k)
    if (!(schedule[k] < schedule[k - 1])) throw InputError("eps schedule must be strictly decreasing");
  const SymMatrix h = f.hessian(x);
  const Vec lambda = sym_eigenvalues(h);
  const std::size_t n = f.dim();
  ExpansionTable t;
  t.limit = 0.5 * (orientation == Orientation::min_max ? lambda[j - 1] : lambda[n - j]);
  t.hessian_norm = h.frobenius_norm();
  for (double eps : schedule) {
    const double r = mvp_residual(f, x, eps, j, budget, orientation);
    t.rows.push_back({eps, r, r / (eps * eps)});
  }
  t.terminal_error = std::abs(t.rows.back().ratio - t.limit);
  // Least-squares slope over rows with a measurable error.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const ExpansionRow& row : t.rows) {
    const double err = std::abs(row.ratio - t.limit);
    if (err <= 1e-12 * std::max(1.0, t.hessian_norm)) continue;
    const double lx = std::log(row.eps);
    const double ly = std::log(err);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m >= 2) t.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return t;
}

}  // namespace hessgame
