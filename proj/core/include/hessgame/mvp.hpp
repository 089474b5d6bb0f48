#pragma once

// Two-point min-max averages of smooth functions and their expansion
//   min_S max_{v in S} (phi(x+eps v) + phi(x-eps v))/2 - phi(x) = eps^2/2 lambda_j(D^2 phi(x)) + o(eps^2).

#include <cstddef>
#include <span>
#include <vector>

#include "hessgame/sampling.hpp"
#include "hessgame/test_functions.hpp"

namespace hessgame {

/// Frames: the eigen-subspace of a finite-difference Hessian (step 1e-3),
/// the coordinate frames and `budget.frames` random frames; inner optimum
/// refined on each frame. max_min swaps the players.
double mvp_residual(const SmoothTestFunction& f, std::span<const double> x, double eps, std::size_t j,
                    const SamplingBudget& budget, Orientation orientation = Orientation::min_max);

struct ExpansionRow {
  double eps = 0.0;
  double residual = 0.0;
  double ratio = 0.0;  // residual / eps^2
};

struct ExpansionTable {
  std::vector<ExpansionRow> rows;
  double limit = 0.0;           // lambda / 2 from the analytic Hessian
  double terminal_error = 0.0;  // |last ratio - limit|
  double slope = 0.0;           // log-log slope of |ratio - limit| against eps (0 if errors vanish)
  double hessian_norm = 0.0;    // Frobenius norm of the analytic Hessian
};

/// Schedule must be strictly decreasing.
ExpansionTable expansion_convergence(const SmoothTestFunction& f, std::span<const double> x, std::size_t j,
                                     std::span<const double> schedule, const SamplingBudget& budget,
                                     Orientation orientation = Orientation::min_max);

}  // namespace hessgame
