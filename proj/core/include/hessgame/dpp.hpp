#pragma once

// The dynamic programming operator
//   T[u](x) = sum_i a_i * min_{S in frames} max_{v in S} ( u(x+eps v) + u(x-eps v) ) / 2
// (max-min for swapped terms), with u replaced by g outside the domain, and
// its fixed-point solvers.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hessgame/datum.hpp"
#include "hessgame/domain.hpp"
#include "hessgame/grid_field.hpp"
#include "hessgame/operator_spec.hpp"
#include "hessgame/sampling.hpp"

namespace hessgame {

/// Per-term subspace samples: frames are lists of indices into a shared pool
/// of unit directions (deduplicated modulo sign).
struct DppSampleSet {
  std::vector<Vec> pool;
  std::vector<std::vector<std::vector<std::size_t>>> frames;  // [term][frame][direction]
};

/// Frames used for one operator term: coordinate frames followed by
/// `budget.frames` random frames (just the identity frame when j = N).
std::vector<SubspaceFrame> dpp_term_frames(std::size_t n, std::size_t j, const SamplingBudget& budget,
                                           std::size_t term);

/// Coordinate frames plus `budget.frames` seeded random frames per term
/// (a single frame when j = N); every frame carries its basis vectors plus
/// `budget.directions` sampled directions.
DppSampleSet build_sample_set(const OperatorSpec& spec, const SamplingBudget& budget);

/// Default budget: 64 frames x 32 directions in 3-d, halved in 2-d.
SamplingBudget default_dpp_budget(std::size_t dim, std::uint64_t seed = 1);

/// Chosen pool direction per term, as returned alongside an operator value.
using TermChoice = std::vector<std::size_t>;

/// Combines two-point averages (indexed like the pool) into the operator value.
double combine_averages(const OperatorSpec& spec, const DppSampleSet& samples,
                        std::span<const double> averages, TermChoice* choice = nullptr);

/// One application of the operator at an interior point, using field.eval
/// inside the domain and g outside. Requires eps >= 2h.
double dpp_apply_at(const GridField& field, const ImplicitDomain& domain, const BoundaryDatum& g,
                    std::span<const double> x, double eps, const OperatorSpec& spec,
                    const SamplingBudget& budget);

enum class SweepMode { jacobi, gauss_seidel, policy };
std::string to_string(SweepMode m);
SweepMode sweep_mode_from_string(const std::string& s);

struct SolveReport {
  std::size_t iterations = 0;         // operator applications over the whole grid
  std::size_t linear_iterations = 0;  // Krylov iterations spent in policy mode
  double residual = 0.0;              // sup over interior nodes of |T[u] - u|
  bool converged = false;
  double wall_time_seconds = 0.0;
  double eps = 0.0;
  double h = 0.0;
  double tol = 0.0;
  std::size_t max_iters = 0;
  SweepMode sweep_mode = SweepMode::policy;
  SamplingBudget budget;
  std::size_t interior_nodes = 0;
  double g_min = 0.0;  // range of the datum values seen by the operator
  double g_max = 0.0;
  bool bounds_ok = true;  // interior values inside [g_min, g_max]
};

struct SolveOptions {
  double eps = 0.05;
  double h = 0.025;
  double tol = 1e-8;
  std::optional<std::size_t> max_iters;  // default 50 * (diam/eps)^2
  SweepMode sweep_mode = SweepMode::policy;
  std::optional<SamplingBudget> budget;  // default_dpp_budget(N)
};

struct SolveResult {
  GridField field;
  SolveReport report;
};

/// The operator restricted to lattice nodes. Every node +- eps*direction
/// offset is the same for all nodes, so each pool direction becomes a fixed
/// interpolation stencil; points leaving the domain are cached as g values.
class DppOperator {
 public:
  DppOperator(const GridField& lattice, const ImplicitDomain& domain, const BoundaryDatum& g,
              double eps, OperatorSpec spec, const SamplingBudget& budget);
  ~DppOperator();
  DppOperator(DppOperator&&) noexcept;
  DppOperator& operator=(DppOperator&&) noexcept;

  /// T[u] at the r-th interior node (ordinal into lattice.interior_nodes()).
  double apply(std::span<const double> u, std::size_t ordinal, TermChoice* choice = nullptr) const;

  /// T[u] at every interior node into `out` (same length as u, exterior copied).
  void apply_all(std::span<const double> u, std::span<double> out) const;

  /// sup over interior nodes of |T[u] - u|.
  double residual(std::span<const double> u) const;

  /// Nodewise values of T[u] with the given fixed choices, as a sparse linear
  /// relation  u_r - sum_c w_rc u_c = b_r  over interior ordinals.
  struct LinearRow {
    std::vector<std::pair<std::size_t, double>> coeffs;  // (ordinal, weight)
    double rhs = 0.0;
  };
  LinearRow linear_row(std::size_t ordinal, const TermChoice& choice,
                       std::span<const double> exterior_values) const;

  const OperatorSpec& spec() const { return spec_; }
  const DppSampleSet& samples() const { return samples_; }
  std::size_t interior_count() const;
  double g_min() const { return g_min_; }
  double g_max() const { return g_max_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  OperatorSpec spec_;
  DppSampleSet samples_;
  double g_min_ = 0.0;
  double g_max_ = 0.0;
};

/// Fixed point of the operator by value iteration (jacobi), in-place
/// symmetric Gauss-Seidel sweeps, or policy iteration with Krylov solves of
/// the frozen-choice linear system. Interior nodes start at min g.
/// Non-convergence is reported, never thrown.
SolveResult dpp_solve(const ImplicitDomain& domain, const BoundaryDatum& g, const OperatorSpec& spec,
                      const SolveOptions& options);

/// Checks T[A] <= T[B] + 1e-12 at every interior node, given A <= B nodewise
/// with identical exterior data. Throws InputError if the precondition fails.
bool monotonicity_check(const GridField& a, const GridField& b, const ImplicitDomain& domain,
                        const BoundaryDatum& g, double eps, const OperatorSpec& spec,
                        const SamplingBudget& budget);

}  // namespace hessgame
