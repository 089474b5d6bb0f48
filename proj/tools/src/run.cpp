#include "hessgame/cli/run.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "hessgame/envelope.hpp"
#include "hessgame/errors.hpp"
#include "hessgame/game.hpp"
#include "hessgame/geocheck.hpp"
#include "hessgame/mvp.hpp"

namespace hessgame::cli {

using nlohmann::json;

namespace {

std::string path_in(const ExperimentConfig& c, const std::string& name) {
  return (std::filesystem::path(c.output.dir) / name).string();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void write_field_csv(const std::string& path, const GridField& field) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  for (std::size_t k = 0; k < field.dim(); ++k) out << 'x' << (k + 1) << ',';
  out << "u\n";
  for (std::size_t i = 0; i < field.size(); ++i) {
    const Vec x = field.node_point(i);
    for (double c : x) out << num(c) << ',';
    out << num(field.value(i)) << '\n';
  }
}

json report_json(const SolveReport& r) {
  return {{"iterations", r.iterations},
          {"linear_iterations", r.linear_iterations},
          {"residual", finite_or_null(r.residual)},
          {"converged", r.converged},
          {"eps", r.eps},
          {"h", r.h},
          {"tol", r.tol},
          {"max_iters", r.max_iters},
          {"sweep_mode", to_string(r.sweep_mode)},
          {"budget", {{"frames", r.budget.frames}, {"directions", r.budget.directions}, {"seed", r.budget.seed}}},
          {"interior_nodes", r.interior_nodes},
          {"g_min", r.g_min},
          {"g_max", r.g_max},
          {"bounds_ok", r.bounds_ok}};
}

json verdict_json(const ConditionVerdict& v) {
  json j{{"condition", v.condition},
         {"status", to_string(v.status)},
         {"j", v.j},
         {"y", v.y},
         {"r", v.r},
         {"deltas", v.deltas},
         {"budget", {{"points", v.budget.points}, {"subspaces", v.budget.subspaces},
                     {"directions", v.budget.directions}, {"seed", v.budget.seed}}},
         {"note", v.note}};
  if (v.passed_delta) j["passed_delta"] = *v.passed_delta;
  if (v.witness)
    j["witness"] = {{"x", v.witness->x},
                    {"frame", v.witness->frame},
                    {"r", v.witness->r},
                    {"delta", v.witness->delta},
                    {"directions_tested", v.witness->directions_tested}};
  return j;
}

struct Solved {
  SolveResult result;
  json summary;
};

Solved solve_and_report(const ExperimentConfig& c, const ImplicitDomain& domain, const BoundaryDatum& g,
                        std::ostream& log) {
  const OperatorSpec spec = c.op.build(domain.dim());
  log << "solving " << spec.describe() << " on " << domain.name() << " (eps=" << c.solver.eps
      << ", h=" << c.solver.h << ")\n";
  SolveResult res = dpp_solve(domain, g, spec, c.solve_options(domain.dim()));
  log << "  iterations " << res.report.iterations << ", residual " << res.report.residual
      << (res.report.converged ? ", converged\n" : ", NOT converged\n");
  json s{{"operator", spec.describe()}, {"domain", domain.name()}, {"datum", g.name()},
         {"report", report_json(res.report)}};
  const Vec& w = domain.witness();
  s["value_at_witness"] = {{"x", w}, {"u", res.field.eval(w)}};
  write_field_csv(path_in(c, c.output.field_csv), res.field);
  return {std::move(res), std::move(s)};
}

int finish(const ExperimentConfig& c, const json& summary, int code) {
  write_text(path_in(c, c.output.summary_json), summary.dump(2) + "\n");
  return code;
}

int run_solve(const ExperimentConfig& c, std::ostream& log) {
  const ImplicitDomain domain = c.domain.build();
  const BoundaryDatum g = c.datum.build();
  Solved s = solve_and_report(c, domain, g, log);
  s.summary["command"] = c.command;
  if (!s.result.report.bounds_ok) return finish(c, s.summary, kExitInvariant);
  return finish(c, s.summary, s.result.report.converged ? kExitOk : kExitNonConvergence);
}

int run_simulate(const ExperimentConfig& c, std::ostream& log) {
  const ImplicitDomain domain = c.domain.build();
  const BoundaryDatum g = c.datum.build();
  if (c.op.terms.size() != 1 || c.op.terms.front().orientation != Orientation::min_max)
    throw ConfigError("operator: simulate needs a single min_max term");
  if (!domain.inside(c.game.x0)) throw ConfigError("game.x0: start point must lie in the domain");
  Solved s = solve_and_report(c, domain, g, log);
  s.summary["command"] = c.command;
  const std::size_t j = c.op.terms.front().j;
  const FieldView u(s.result.field, domain, g);
  const SamplingBudget budget = *c.solve_options(domain.dim()).budget;
  const MinimizerStrategy s1 = greedy_minimizer(u, domain.dim(), j, c.solver.eps, budget);
  const MaximizerStrategy s2 = greedy_maximizer(u, c.solver.eps, budget.directions, c.game.eta);
  log << "playing " << c.game.games << " games from x0\n";
  const ValueEstimate est = estimate_value(domain, g, c.game.x0, c.solver.eps, s1, s2, c.game.games, c.seed,
                                           c.game.step_cap);
  if (!c.game.transcript.empty()) {
    const GameTranscript t = play_game(domain, g, c.game.x0, c.solver.eps, s1, s2, sub_seed(c.seed, 0), c.game.step_cap);
    std::ofstream out(path_in(c, c.game.transcript), std::ios::binary);
    t.write_csv(out);
  }
  s.summary["estimate"] = {{"x0", c.game.x0},
                           {"mean", est.mean},
                           {"std_error", est.std_error},
                           {"games", est.games},
                           {"unterminated", est.unterminated},
                           {"head_fraction", est.head_fraction},
                           {"flips", est.flips},
                           {"field_value", u(c.game.x0)}};
  log << "  mean " << est.mean << " +- " << est.std_error << " vs field " << u(c.game.x0) << "\n";
  if (!s.result.report.bounds_ok) return finish(c, s.summary, kExitInvariant);
  return finish(c, s.summary, s.result.report.converged ? kExitOk : kExitNonConvergence);
}

int run_check(const ExperimentConfig& c, std::ostream& log) {
  const ImplicitDomain domain = c.domain.build();
  const Vec y = c.check.point.empty() ? boundary_point_towards(domain, c.check.direction) : c.check.point;
  GeoBudget budget{c.check.points, c.check.subspaces, c.check.directions, c.seed};
  json s{{"command", c.command}, {"domain", domain.name()}, {"y", y}, {"j", c.check.j}};
  for (const std::string& cond : c.check.conditions) {
    log << "checking condition " << cond << "\n";
    if (cond == "G") {
      const ConditionVerdict v = check_G(domain, c.check.j, y, c.check.r, budget, c.check.deltas);
      json vj = verdict_json(v);
      if (v.witness) vj["replay_confirms"] = replay_G_witness(domain, v);
      s["G"] = vj;
    } else if (cond == "F") {
      s["F"] = verdict_json(check_F(domain, c.check.j, y, c.check.r, budget, c.check.deltas));
    } else if (cond == "H") {
      try {
        const CurvatureReport rep = principal_curvatures(domain, y);
        s["curvatures"] = {{"kappa", rep.curvatures}, {"normal", rep.normal}};
        s["H"] = check_H(domain, c.check.j, y);
      } catch (const SingularPointError& e) {
        s["H"] = {{"error", e.what()}};
      } catch (const ConfigError& e) {
        s["H"] = {{"error", e.what()}};
      }
    }
  }
  return finish(c, s, kExitOk);
}

int run_envelope(const ExperimentConfig& c, std::ostream& log) {
  const ImplicitDomain domain = c.domain.build();
  const BoundaryDatum g = c.datum.build();
  const LiftedCloud cloud = boundary_cloud(domain, g, c.envelope.cloud_points, c.seed);
  json s{{"command", c.command}, {"domain", domain.name()}, {"datum", g.name()}, {"kind", c.envelope.kind},
         {"cloud_points", cloud.points.size()}};
  json queries = json::array();
  for (const Vec& q : c.envelope.queries) {
    const EnvelopeValue v = c.envelope.kind == "convex" ? convex_envelope_eval(cloud, q) : concave_envelope_eval(cloud, q);
    json qj{{"x", q}, {"feasible", v.ok()}};
    if (v.ok()) qj["value"] = v.value;
    queries.push_back(qj);
  }
  s["queries"] = queries;
  int code = kExitOk;
  if (c.envelope.membership_slices > 0) {
    Solved solved = solve_and_report(c, domain, g, log);
    s["solve"] = solved.summary;
    MembershipOptions mo;
    mo.n_slices = c.envelope.membership_slices;
    mo.seed = c.seed;
    mo.solver_tol = c.solver.tol;
    mo.eps = c.solver.eps;
    const MembershipReport m = hj_membership_check(solved.result.field, domain, g, c.envelope.j, mo);
    s["membership"] = {{"slices_checked", m.slices_checked},
                       {"slices_skipped", m.slices_skipped},
                       {"worst_violation", m.worst_violation},
                       {"worst_base", m.worst_base},
                       {"tolerance", {{"solver_tol", m.solver_tol}, {"interp_slack", m.interp_slack},
                                      {"boundary_slack", m.boundary_slack}, {"cloud_bias", m.cloud_bias},
                                      {"total", m.tolerance()}}},
                       {"passed", m.passed()}};
    if (!solved.result.report.converged) code = kExitNonConvergence;
  }
  return finish(c, s, code);
}

int run_mvp(const ExperimentConfig& c, std::ostream& log) {
  const Orientation orient = orientation_from_string(c.mvp.orientation);
  SamplingBudget budget{32, 16, c.seed};
  if (c.solver.frames) budget.frames = *c.solver.frames;
  if (c.solver.directions) budget.directions = *c.solver.directions;
  std::ofstream table(path_in(c, c.output.table_csv), std::ios::binary);
  if (!table) throw ConfigError("cannot write table");
  table << "function,j,eps,residual,ratio,limit\n";
  json rows = json::array();
  bool any = false;
  for (const CatalogEntry& e : test_function_catalog()) {
    if (c.mvp.function != "all" && c.mvp.function != e.fn.name()) continue;
    any = true;
    std::vector<std::size_t> js = c.mvp.js;
    if (js.empty())
      for (std::size_t j = 1; j <= e.fn.dim(); ++j) js.push_back(j);
    for (std::size_t j : js) {
      if (j < 1 || j > e.fn.dim()) throw ConfigError("mvp.j: index out of range for " + e.fn.name());
      const ExpansionTable t = expansion_convergence(e.fn, e.point, j, c.mvp.schedule, budget, orient);
      for (const ExpansionRow& r : t.rows)
        table << e.fn.name() << ',' << j << ',' << num(r.eps) << ',' << num(r.residual) << ',' << num(r.ratio) << ','
              << num(t.limit) << '\n';
      rows.push_back({{"function", e.fn.name()}, {"j", j}, {"limit", t.limit}, {"terminal_error", t.terminal_error},
                      {"slope", t.slope}, {"hessian_norm", t.hessian_norm}});
    }
  }
  if (!any) throw ConfigError("mvp.function: unknown test function '" + c.mvp.function + "'");
  log << "mvp table written for " << rows.size() << " (function, j) pairs\n";
  return finish(c, {{"command", c.command}, {"orientation", c.mvp.orientation}, {"results", rows}}, kExitOk);
}

}  // namespace

int run(const ExperimentConfig& config, std::ostream& log) {
  std::filesystem::create_directories(config.output.dir);
  write_text(path_in(config, config.output.config_echo), to_yaml(config));
  if (config.command == "solve") return run_solve(config, log);
  if (config.command == "simulate") return run_simulate(config, log);
  if (config.command == "check-domain") return run_check(config, log);
  if (config.command == "envelope") return run_envelope(config, log);
  if (config.command == "mvp-check") return run_mvp(config, log);
  throw ConfigError("unknown command '" + config.command + "'");
}

int run_file(const std::string& path, const std::string& command, const std::string& out_dir, std::ostream& log) {
  try {
    ExperimentConfig config = load_config(path, command);
    if (!out_dir.empty()) config.output.dir = out_dir;
    return run(config, log);
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InputError& e) {
    log << "input error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvariantError& e) {
    log << "invariant breach: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace hessgame::cli
