#include "hessgame/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <random>

#include "hessgame/dpp.hpp"
#include "hessgame/errors.hpp"

namespace hessgame {

double FieldView::operator()(std::span<const double> x) const {
  return domain_->inside(x) ? field_->eval(x) : (*g_)(x);
}

double FieldView::average(std::span<const double> x, std::span<const double> v, double eps) const {
  return 0.5 * ((*this)(axpy(eps, v, x)) + (*this)(axpy(-eps, v, x)));
}

MinimizerStrategy greedy_minimizer(FieldView u, std::size_t dim, std::size_t j, double eps,
                                   const SamplingBudget& budget) {
  struct Candidate {
    SubspaceFrame frame;
    std::vector<Vec> directions;
  };
  auto candidates = std::make_shared<std::vector<Candidate>>();
  Rng rng(sub_seed(budget.seed, 77));
  for (SubspaceFrame& f : dpp_term_frames(dim, j, budget, 0)) {
    auto dirs = frame_directions(f, budget.directions, rng);
    candidates->push_back({std::move(f), std::move(dirs)});
  }
  return {"greedy", [u, eps, candidates](std::span<const Vec> history, Rng&) {
            const Vec& x = history.back();
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_index = 0;
            for (std::size_t c = 0; c < candidates->size(); ++c) {
              double inner = -std::numeric_limits<double>::infinity();
              for (const Vec& v : (*candidates)[c].directions) inner = std::max(inner, u.average(x, v, eps));
              if (inner < best) {
                best = inner;
                best_index = c;
              }
            }
            return (*candidates)[best_index].frame;
          }};
}

MinimizerStrategy fixed_subspace_minimizer(SubspaceFrame frame) {
  return {"fixed", [frame](std::span<const Vec>, Rng&) { return frame; }};
}

MinimizerStrategy scripted_minimizer(std::vector<SubspaceFrame> script) {
  if (script.empty()) throw InputError("scripted strategy needs at least one frame");
  return {"scripted", [script](std::span<const Vec> history, Rng&) {
            return script[(history.size() - 1) % script.size()];
          }};
}

MinimizerStrategy random_minimizer(std::size_t dim, std::size_t j) {
  return {"random", [dim, j](std::span<const Vec>, Rng& rng) { return random_frame(dim, j, rng); }};
}

MinimizerStrategy sampled_minimizer(std::vector<SubspaceFrame> frames) {
  if (frames.empty()) throw InputError("sampled minimizer needs at least one frame");
  return {"sampled", [frames = std::move(frames)](std::span<const Vec>, Rng& rng) {
            return frames[std::uniform_int_distribution<std::size_t>(0, frames.size() - 1)(rng)];
          }};
}

MaximizerStrategy greedy_maximizer(FieldView u, double eps, std::size_t directions, double eta) {
  if (eta < 0.0) throw InputError("eta must be nonnegative");
  return {"greedy", [u, eps, directions, eta](std::span<const Vec> history, std::size_t k,
                                              const SubspaceFrame& s, Rng&) {
            const Vec& x = history.back();
            Rng dir_rng(sub_seed(0x9a3e, s.dim()));
            const auto dirs = frame_directions(s, directions, dir_rng);
            std::vector<double> values(dirs.size());
            double best = -std::numeric_limits<double>::infinity();
            std::size_t best_index = 0;
            for (std::size_t d = 0; d < dirs.size(); ++d) {
              values[d] = u.average(x, dirs[d], eps);
              if (values[d] > best) {
                best = values[d];
                best_index = d;
              }
            }
            if (eta > 0.0) {
              const double slack = eta * std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(k + 1, 1000)));
              for (std::size_t d = 0; d < dirs.size(); ++d)
                if (values[d] >= best - slack) return dirs[d];
            }
            return dirs[best_index];
          }};
}

MaximizerStrategy fixed_direction_maximizer(Vec coeffs) {
  return {"fixed", [coeffs](std::span<const Vec>, std::size_t, const SubspaceFrame& s, Rng&) {
            if (coeffs.size() != s.dim()) throw InputError("fixed direction has wrong frame dimension");
            Vec v = s.embed(coeffs);
            const double len = norm(v);
            if (!(len > 0.0)) throw InputError("fixed direction is zero");
            for (double& c : v) c /= len;
            return v;
          }};
}

void GameTranscript::write_csv(std::ostream& out) const {
  for (std::size_t k = 0; k < positions.size(); ++k) {
    out << k;
    for (double c : positions[k]) out << ',' << c;
    out << ',';
    if (k > 0) out << static_cast<int>(coins[k - 1]);
    out << '\n';
  }
}

GameTranscript play_game(const ImplicitDomain& domain, const BoundaryDatum& g, std::span<const double> x0,
                         double eps, const MinimizerStrategy& s1, const MaximizerStrategy& s2,
                         std::uint64_t seed, std::size_t step_cap) {
  if (!(eps > 0.0)) throw InputError("eps must be positive");
  if (step_cap < 1) throw InputError("step cap must be at least 1");
  if (x0.size() != domain.dim() || !domain.inside(x0)) throw InputError("start point must lie in the domain");
  Rng coin_rng(seed);
  Rng strategy_rng(sub_seed(seed, 1));
  GameTranscript t;
  t.positions.emplace_back(x0.begin(), x0.end());
  while (t.steps < step_cap) {
    const SubspaceFrame s = s1.choose(t.positions, strategy_rng);
    const Vec v = s2.choose(t.positions, t.steps, s, strategy_rng);
    if (std::abs(norm(v) - 1.0) > 1e-12 || s.distance_to(v) > 1e-10)
      throw InvariantError("maximizer returned a direction outside its frame");
    const bool heads = coin_flip(coin_rng);
    t.coins.push_back(heads ? 1 : 0);
    t.positions.push_back(axpy(heads ? eps : -eps, v, t.positions.back()));
    ++t.steps;
    if (!domain.inside(t.positions.back())) {
      t.terminated = true;
      t.payoff = g(t.positions.back());
      break;
    }
  }
  return t;
}

ValueEstimate estimate_value(const ImplicitDomain& domain, const BoundaryDatum& g, std::span<const double> x0,
                             double eps, const MinimizerStrategy& s1, const MaximizerStrategy& s2,
                             std::size_t n_games, std::uint64_t seed, std::size_t step_cap) {
  if (n_games < 1) throw InputError("need at least one game");
  CompensatedSum sum;
  CompensatedSum sum_sq;
  std::size_t heads = 0;
  ValueEstimate est;
  for (std::size_t i = 0; i < n_games; ++i) {
    const GameTranscript t = play_game(domain, g, x0, eps, s1, s2, sub_seed(seed, i), step_cap);
    est.flips += t.coins.size();
    heads += static_cast<std::size_t>(std::count(t.coins.begin(), t.coins.end(), 1));
    if (!t.terminated) {
      ++est.unterminated;
      continue;
    }
    sum.add(*t.payoff);
    sum_sq.add(*t.payoff * *t.payoff);
    ++est.games;
  }
  if (est.games > 0) {
    const double n = static_cast<double>(est.games);
    est.mean = sum.value() / n;
    const double var = est.games > 1 ? std::max(0.0, (sum_sq.value() - n * est.mean * est.mean) / (n - 1.0)) : 0.0;
    est.std_error = std::sqrt(var / n);
  }
  est.head_fraction = est.flips ? static_cast<double>(heads) / static_cast<double>(est.flips) : 0.0;
  return est;
}

double interpolation_slack(const GridField& field) {
  const auto& counts = field.counts();
  const auto& strides = field.strides();
  const auto u = field.values();
  double total = 0.0;
  for (std::size_t k = 0; k < field.dim(); ++k) {
    if (counts[k] < 3) continue;
    double worst = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) {
      const std::size_t ik = (i / strides[k]) % counts[k];
      if (ik == 0 || ik + 1 == counts[k]) continue;
      worst = std::max(worst, std::abs(u[i + strides[k]] - 2.0 * u[i] + u[i - strides[k]]));
    }
    total += worst / 8.0;
  }
  return total;
}

SubmartingaleReport submartingale_check(const ImplicitDomain& domain, const BoundaryDatum& g,
                                        const GridField& field, double eps, std::size_t j, double eta,
                                        std::size_t n_games, std::uint64_t seed, double tol,
                                        std::optional<SamplingBudget> budget, std::size_t step_cap) {
  if (!(eta > 0.0)) throw InputError("eta must be positive");
  const FieldView u(field, domain, g);
  const SamplingBudget b = budget ? *budget : default_dpp_budget(domain.dim());
  const MinimizerStrategy s1 = sampled_minimizer(dpp_term_frames(domain.dim(), j, b, 0));
  const MaximizerStrategy s2 = greedy_maximizer(u, eps, 4 * b.directions, eta);

  SubmartingaleReport rep;
  rep.tol = tol;
  rep.interp_slack = interpolation_slack(field);
  rep.min_drift = std::numeric_limits<double>::infinity();
  rep.min_boundary_drift = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> cell;
  std::vector<double> weights;
  CompensatedSum sum;
  CompensatedSum sum_sq;
  const Vec& x0 = domain.witness();
  for (std::size_t i = 0; i < n_games; ++i) {
    const std::uint64_t game_seed = sub_seed(seed, i);
    Rng coin_rng(game_seed);
    Rng strategy_rng(sub_seed(game_seed, 1));
    std::vector<Vec> history{x0};
    bool done = false;
    for (std::size_t k = 0; k < step_cap && !done; ++k) {
      const Vec& x = history.back();
      const SubspaceFrame s = s1.choose(history, strategy_rng);
      const Vec v = s2.choose(history, k, s, strategy_rng);
      const double bonus = eta * std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(k + 1, 1000)));
      const double ux = u(x);
      const double drift = u.average(x, v, eps) - ux + bonus;
      field.interpolation_stencil(x, cell, weights);
      if (std::all_of(cell.begin(), cell.end(), [&](std::size_t n) { return field.is_interior(n); })) {
        rep.min_drift = std::min(rep.min_drift, drift);
      } else {
        ++rep.boundary_states;
        rep.min_boundary_drift = std::min(rep.min_boundary_drift, drift);
      }
      Vec next = axpy(coin_flip(coin_rng) ? eps : -eps, v, x);
      const double increment = u(next) - ux + bonus;
      sum.add(increment);
      sum_sq.add(increment * increment);
      ++rep.steps;
      done = !domain.inside(next);
      history.push_back(std::move(next));
    }
    ++rep.games;
    if (!done) ++rep.unterminated;
  }
  if (rep.steps > 0) {
    const double n = static_cast<double>(rep.steps);
    rep.mean_increment = sum.value() / n;
    const double var = rep.steps > 1 ? std::max(0.0, (sum_sq.value() - n * rep.mean_increment * rep.mean_increment) / (n - 1.0)) : 0.0;
    rep.increment_se = std::sqrt(var / n);
  }
  if (rep.min_drift == std::numeric_limits<double>::infinity()) rep.min_drift = 0.0;
  if (rep.boundary_states == 0) rep.min_boundary_drift = 0.0;
  const double allowance = 2.0 * tol + rep.interp_slack;
  rep.passed = rep.min_drift >= -allowance && rep.mean_increment >= -(allowance + 3.0 * rep.increment_se);
  return rep;
}

}  // namespace hessgame
