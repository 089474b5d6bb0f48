#pragma once

// The tug-of-war style game: Player I picks a j-dimensional subspace,
// Player II a unit direction in it, a fair coin moves the token by +-eps v.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hessgame/datum.hpp"
#include "hessgame/domain.hpp"
#include "hessgame/grid_field.hpp"
#include "hessgame/rng.hpp"
#include "hessgame/sampling.hpp"

namespace hessgame {

/// Value of a solved field at a game position: field.eval inside the domain,
/// g outside.
class FieldView {
 public:
  FieldView(const GridField& field, const ImplicitDomain& domain, const BoundaryDatum& g)
      : field_(&field), domain_(&domain), g_(&g) {}
  double operator()(std::span<const double> x) const;
  /// (u(x + eps v) + u(x - eps v)) / 2
  double average(std::span<const double> x, std::span<const double> v, double eps) const;

 private:
  const GridField* field_;
  const ImplicitDomain* domain_;
  const BoundaryDatum* g_;
};

/// history: positions x_0..x_k (current position last).
struct MinimizerStrategy {
  std::string name;
  std::function<SubspaceFrame(std::span<const Vec> history, Rng& rng)> choose;
};

/// Receives the step index k so eta-suboptimal schedules can be expressed.
struct MaximizerStrategy {
  std::string name;
  std::function<Vec(std::span<const Vec> history, std::size_t k, const SubspaceFrame& s, Rng& rng)> choose;
};

/// Picks the frame of the dpp sample set minimising the inner maximum of the
/// two-point average of `u` (same frames as dpp_solve with `budget`).
MinimizerStrategy greedy_minimizer(FieldView u, std::size_t dim, std::size_t j, double eps,
                                   const SamplingBudget& budget);
MinimizerStrategy fixed_subspace_minimizer(SubspaceFrame frame);
/// Replays the given frames cyclically by step index.
MinimizerStrategy scripted_minimizer(std::vector<SubspaceFrame> script);
/// Fresh seeded random frame at every step.
MinimizerStrategy random_minimizer(std::size_t dim, std::size_t j);
/// Uniform random pick from a fixed list of frames at every step.
MinimizerStrategy sampled_minimizer(std::vector<SubspaceFrame> frames);

/// Maximises the two-point average over sampled directions of the offered
/// frame. With eta > 0 the first direction within eta * 2^-(k+1) of the
/// sampled maximum is played.
MaximizerStrategy greedy_maximizer(FieldView u, double eps, std::size_t directions, double eta = 0.0);
/// Plays embed(coeffs) normalised in whatever frame is offered.
MaximizerStrategy fixed_direction_maximizer(Vec coeffs);

struct GameTranscript {
  std::vector<Vec> positions;  // x_0 .. x_tau (or up to the cap)
  std::vector<std::uint8_t> coins;  // 1 = heads (+eps v)
  std::size_t steps = 0;
  bool terminated = false;
  std::optional<double> payoff;  // g(x_tau); empty when unterminated

  /// One line per step: "k,x1,...,xN,coin" (coin empty for x_0).
  void write_csv(std::ostream& out) const;
};

/// Coin flips come from Rng(seed); strategies get Rng(sub_seed(seed, 1)).
GameTranscript play_game(const ImplicitDomain& domain, const BoundaryDatum& g, std::span<const double> x0,
                         double eps, const MinimizerStrategy& s1, const MaximizerStrategy& s2,
                         std::uint64_t seed, std::size_t step_cap);

struct ValueEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t games = 0;
  std::size_t unterminated = 0;
  double head_fraction = 0.0;  // over all coin flips
  std::size_t flips = 0;
};

/// Game i uses seed sub_seed(seed, i). Unterminated games are excluded and counted.
ValueEstimate estimate_value(const ImplicitDomain& domain, const BoundaryDatum& g, std::span<const double> x0,
                             double eps, const MinimizerStrategy& s1, const MaximizerStrategy& s2,
                             std::size_t n_games, std::uint64_t seed, std::size_t step_cap = 1000000);

struct SubmartingaleReport {
  std::size_t games = 0;
  std::size_t unterminated = 0;
  std::size_t steps = 0;
  double min_drift = 0.0;        // smallest exact conditional drift over resolved states
  std::size_t boundary_states = 0;   // states whose interpolation cell touches exterior nodes
  double min_boundary_drift = 0.0;   // reported only; the field is not resolved there
  double mean_increment = 0.0;   // empirical mean of M_{k+1} - M_k
  double increment_se = 0.0;
  double tol = 0.0;
  double interp_slack = 0.0;
  bool passed = false;
};

/// M_k = u(x_k) - eta 2^-k along games with Player II greedy within
/// eta 2^-(k+1) and Player I drawing random frames from the DPP sample set
/// of `budget` (default_dpp_budget(N) when empty). The exact drift at a
/// visited state is avg(u(x +- eps v)) - u(x) + eta 2^-(k+1). Passes when
/// the min drift over states whose interpolation cell is all interior nodes
/// is >= -(2 tol + slack) and the empirical mean increment over all steps is
/// >= -(2 tol + slack + 3 SE), slack being the interpolation bound of the field.
SubmartingaleReport submartingale_check(const ImplicitDomain& domain, const BoundaryDatum& g,
                                        const GridField& field, double eps, std::size_t j, double eta,
                                        std::size_t n_games, std::uint64_t seed, double tol,
                                        std::optional<SamplingBudget> budget = std::nullopt,
                                        std::size_t step_cap = 1000000);
/// (h_k^2 / 8) * max |second difference / h_k^2| summed over axes: the
/// multilinear interpolation error bound for the node data.
double interpolation_slack(const GridField& field);

}  // namespace hessgame
