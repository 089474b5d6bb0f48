#pragma once

// Sampled checkers for the boundary conditions (G_j), (F_j) and (H), boundary
// curvatures, and the curvature barrier.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hessgame/domain.hpp"
#include "hessgame/spectral.hpp"

namespace hessgame {

enum class VerdictStatus { pass_at_budget, violation };
std::string to_string(VerdictStatus s);

struct GeoBudget {
  std::size_t points = 1000;     // interior points x near y
  std::size_t subspaces = 100;   // random frames on top of the deterministic ones
  std::size_t directions = 100;  // directions per frame
  std::uint64_t seed = 1;
};

/// Data certifying a failure. For (G): the point x and frame S for which no
/// sampled line through x within S meets the boundary inside B_r(y).
/// For (F): the last counterexample point found for the smallest delta.
struct ConditionWitness {
  Vec x;
  std::vector<Vec> frame;
  double r = 0.0;
  double delta = 0.0;
  std::size_t directions_tested = 0;
};

struct ConditionVerdict {
  std::string condition;  // "G" or "F"
  VerdictStatus status = VerdictStatus::pass_at_budget;
  std::size_t j = 0;
  Vec y;
  double r = 0.0;
  std::vector<double> deltas;      // schedule tested
  std::optional<double> passed_delta;  // first delta that passed (G)
  std::optional<ConditionWitness> witness;
  GeoBudget budget;
  std::string note;
};

/// Default schedule {r/2, r/4, r/8}.
std::vector<double> default_delta_schedule(double r);

/// Does some sampled direction v of the frame give a line x + t v meeting
/// the boundary inside B_r(y)?
bool line_family_hits(const ImplicitDomain& domain, std::span<const double> x, const std::vector<Vec>& frame,
                      std::span<const double> y, double r, std::size_t directions, std::uint64_t seed,
                      std::size_t* tested = nullptr);

/// Passes when some delta of the schedule admits no (x, S) without a hitting
/// line; otherwise returns the witness found at the smallest delta, confirmed
/// at four times the direction budget. Throws InputError if y is off the boundary.
ConditionVerdict check_G(const ImplicitDomain& domain, std::size_t j, std::span<const double> y, double r,
                         const GeoBudget& budget = {}, std::vector<double> deltas = {});

/// Re-runs the line search on the stored witness with `multiplier` times the
/// directions; true when still no hitting line is found.
bool replay_G_witness(const ImplicitDomain& domain, const ConditionVerdict& verdict, std::size_t multiplier = 4);

/// Searches (T, v, lambda, theta) for a certificate at every delta of the
/// schedule. A violation only means "no certificate at budget".
ConditionVerdict check_F(const ImplicitDomain& domain, std::size_t j, std::span<const double> y, double r,
                         const GeoBudget& budget = {}, std::vector<double> deltas = {});

struct CurvatureReport {
  Vec y;
  Vec curvatures;  // ascending, N - 1 values
  Vec normal;      // unit outer normal
  std::vector<Vec> principal_directions;  // pairs with curvatures
};

/// Shape operator from a finite-difference Hessian of the level function
/// (step 1e-4 * diam). Unit sphere -> all +1. Throws SingularPointError on a
/// vanishing gradient or a kink.
CurvatureReport principal_curvatures(const ImplicitDomain& domain, std::span<const double> y);

/// kappa_j > 1e-8 and kappa_{N-j+1} > 1e-8. Indices outside [1, N-1] are a ConfigError.
bool check_H(const ImplicitDomain& domain, std::size_t j, std::span<const double> y);

/// u(x) = x_N - 1/2 sum_{i<N} a_i x_i^2 - 1/2 b x_N^2 with a_i = kappa_i - eta,
/// b = kappa_{N-j+1} - eta, in coordinates where y = 0 and e_N is the inward normal.
double barrier_eval(std::span<const double> kappa, std::size_t j, double eta, std::span<const double> x);
SymMatrix barrier_hessian(std::span<const double> kappa, std::size_t j, double eta);

/// Boundary point reached from the witness along `direction`.
Vec boundary_point_towards(const ImplicitDomain& domain, std::span<const double> direction);

}  // namespace hessgame
