#include "hessgame/cli/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "hessgame/errors.hpp"
#include "hessgame/spectral.hpp"

namespace hessgame::cli {

ConfigIssue::ConfigIssue(std::string field, int line, const std::string& message)
    : ConfigError((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + field + ": " + message),
      field_(std::move(field)),
      line_(line) {}

namespace {

const std::set<std::string> kCommands{"solve", "simulate", "check-domain", "envelope", "mvp-check"};

int line_of(const YAML::Node& n) { return n.Mark().is_null() ? 0 : n.Mark().line + 1; }

// Mapping reader that tracks the field path and rejects unknown keys.
class Section {
 public:
  Section(YAML::Node node, std::string path) : node_(std::move(node)), path_(std::move(path)) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) fail("", "expected a mapping");
  }

  bool present() const { return node_ && node_.IsMap(); }
  std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    const YAML::Node n = key.empty() || !present() ? node_ : node_[key];
    throw ConfigIssue(key.empty() ? path_ : field(key), n ? line_of(n) : line_of(node_), msg);
  }

  bool has(const std::string& key) const {
    seen_.insert(key);
    return present() && node_[key] && !node_[key].IsNull();
  }

  YAML::Node raw(const std::string& key) const {
    seen_.insert(key);
    return present() ? node_[key] : YAML::Node();
  }

  Section sub(const std::string& key) const { return Section(raw(key), field(key)); }

  template <class T>
  T get(const std::string& key, T fallback) const {
    if (!has(key)) return fallback;
    return as<T>(node_[key], field(key));
  }

  template <class T>
  T require(const std::string& key) const {
    if (!has(key)) fail(key, "required field is missing");
    return as<T>(node_[key], field(key));
  }

  void finish() const {
    if (!present()) return;
    for (const auto& kv : node_) {
      const std::string key = kv.first.as<std::string>();
      if (!seen_.count(key)) throw ConfigIssue(field(key), line_of(kv.first), "unknown field");
    }
  }

  template <class T>
  static T as(const YAML::Node& n, const std::string& path) {
    try {
      return n.as<T>();
    } catch (const YAML::Exception&) {
      throw ConfigIssue(path, line_of(n), "has the wrong type");
    }
  }

 private:
  YAML::Node node_;
  std::string path_;
  mutable std::set<std::string> seen_;
};

void require_that(bool ok, const Section& s, const std::string& key, const std::string& msg) {
  if (!ok) s.fail(key, msg);
}

void check_dim(const Section& s, const std::string& key, std::size_t dim) {
  require_that(dim >= 2 && dim <= kMaxDim, s, key, "dimension must lie in [2, 8]");
}

DomainConfig parse_domain(const Section& s) {
  if (!s.present()) s.fail("", "required section is missing");
  DomainConfig d;
  d.type = s.require<std::string>("type");
  if (d.type == "ball") {
    d.center = s.require<Vec>("center");
    d.radius = s.get<double>("radius", 1.0);
    check_dim(s, "center", d.center.size());
    require_that(d.radius > 0.0, s, "radius", "must be positive");
  } else if (d.type == "half_ball") {
    d.dim = s.require<std::size_t>("dim");
    d.radius = s.get<double>("radius", 1.0);
    d.cut_axis = s.get<std::size_t>("cut_axis", 2);
    check_dim(s, "dim", d.dim);
    require_that(d.radius > 0.0, s, "radius", "must be positive");
    require_that(d.cut_axis >= 1 && d.cut_axis <= d.dim, s, "cut_axis", "must lie in [1, dim]");
  } else if (d.type == "union_of_balls") {
    const YAML::Node balls = s.raw("balls");
    if (!balls || !balls.IsSequence() || balls.size() == 0) s.fail("balls", "needs a nonempty list");
    for (std::size_t i = 0; i < balls.size(); ++i) {
      Section b(balls[i], s.field("balls") + "[" + std::to_string(i) + "]");
      BallSpec spec{b.require<Vec>("center"), b.get<double>("radius", 1.0)};
      require_that(spec.radius > 0.0, b, "radius", "must be positive");
      check_dim(b, "center", spec.center.size());
      require_that(spec.center.size() == d.dimension() || d.balls.empty(), b, "center", "dimension mismatch");
      b.finish();
      d.balls.push_back(std::move(spec));
    }
  } else if (d.type == "ellipsoid") {
    d.center = s.require<Vec>("center");
    d.semi_axes = s.require<Vec>("semi_axes");
    check_dim(s, "center", d.center.size());
    require_that(d.semi_axes.size() == d.center.size(), s, "semi_axes", "must match the center's dimension");
    for (double a : d.semi_axes) require_that(a > 0.0, s, "semi_axes", "entries must be positive");
  } else if (d.type == "polytope") {
    d.dim = s.require<std::size_t>("dim");
    check_dim(s, "dim", d.dim);
    const YAML::Node faces = s.raw("faces");
    if (!faces || !faces.IsSequence() || faces.size() == 0) s.fail("faces", "needs a nonempty list");
    for (std::size_t i = 0; i < faces.size(); ++i) {
      Section f(faces[i], s.field("faces") + "[" + std::to_string(i) + "]");
      HalfSpace h{f.require<Vec>("normal"), f.require<double>("offset")};
      require_that(h.normal.size() == d.dim, f, "normal", "must have dim entries");
      f.finish();
      d.faces.push_back(std::move(h));
    }
  } else if (d.type == "box") {
    d.lo = s.require<Vec>("lo");
    d.hi = s.require<Vec>("hi");
    check_dim(s, "lo", d.lo.size());
    require_that(d.hi.size() == d.lo.size(), s, "hi", "must match lo's dimension");
    for (std::size_t k = 0; k < d.lo.size(); ++k) require_that(d.hi[k] > d.lo[k], s, "hi", "must exceed lo");
  } else {
    s.fail("type", "unknown domain type '" + d.type + "'");
  }
  s.finish();
  return d;
}

DatumConfig parse_datum(const Section& s, std::size_t dim) {
  if (!s.present()) s.fail("", "required section is missing");
  DatumConfig g;
  g.type = s.require<std::string>("type");
  g.negate = s.get<bool>("negate", false);
  if (g.type == "polynomial") {
    const YAML::Node terms = s.raw("terms");
    if (!terms || !terms.IsSequence() || terms.size() == 0) s.fail("terms", "needs a nonempty list");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Section t(terms[i], s.field("terms") + "[" + std::to_string(i) + "]");
      Monomial m{t.require<double>("coef"), t.require<std::vector<int>>("powers")};
      require_that(m.powers.size() == dim, t, "powers", "needs one exponent per coordinate");
      for (int p : m.powers) require_that(p >= 0, t, "powers", "exponents must be nonnegative");
      t.finish();
      g.terms.push_back(std::move(m));
    }
  } else if (g.type == "peak") {
    g.center = s.require<Vec>("center");
    g.radius = s.require<double>("radius");
    g.height = s.get<double>("height", 1.0);
    require_that(g.center.size() == dim, s, "center", "dimension mismatch with the domain");
    require_that(g.radius > 0.0, s, "radius", "must be positive");
  } else if (g.type == "constant") {
    g.value = s.require<double>("value");
  } else if (g.type == "affine") {
    g.slope = s.require<Vec>("slope");
    g.intercept = s.get<double>("intercept", 0.0);
    require_that(g.slope.size() == dim, s, "slope", "dimension mismatch with the domain");
  } else {
    s.fail("type", "unknown datum type '" + g.type + "'");
  }
  s.finish();
  return g;
}

Orientation parse_orientation(const Section& s, const std::string& key) {
  const std::string o = s.get<std::string>(key, "min_max");
  if (o == "min_max") return Orientation::min_max;
  if (o == "max_min") return Orientation::max_min;
  s.fail(key, "must be min_max or max_min");
}

OperatorConfig parse_operator(const Section& s, std::size_t dim) {
  OperatorConfig op;
  const bool has_terms = s.has("terms");
  const bool has_kind = s.has("kind");
  const bool has_j = s.has("j");
  require_that(static_cast<int>(has_terms) + static_cast<int>(has_kind) + static_cast<int>(has_j) <= 1, s, "",
               "give exactly one of j, terms or kind");
  if (has_terms) {
    const YAML::Node terms = s.raw("terms");
    if (!terms.IsSequence() || terms.size() == 0) s.fail("terms", "needs a nonempty list");
    double total = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Section t(terms[i], s.field("terms") + "[" + std::to_string(i) + "]");
      OperatorTerm term{t.require<double>("weight"), t.require<std::size_t>("j"), parse_orientation(t, "orientation")};
      require_that(term.weight > 0.0, t, "weight", "must be positive");
      require_that(term.j >= 1 && term.j <= dim, t, "j", "must lie in [1, N]");
      t.finish();
      total += term.weight;
      op.terms.push_back(term);
    }
    require_that(std::abs(total - 1.0) <= 1e-12, s, "terms",
                 "weights must sum to 1 (got " + std::to_string(total) + ")");
  } else if (has_kind) {
    const std::string kind = s.require<std::string>("kind");
    const std::size_t k = s.get<std::size_t>("k", 1);
    if (kind == "laplacian") {
      op.terms = OperatorSpec::laplacian(dim).terms();
    } else if (kind == "pucci_plus" || kind == "pucci_minus") {
      require_that(k >= 1 && k <= dim, s, "k", "must lie in [1, N]");
      op.terms = (kind == "pucci_plus" ? OperatorSpec::pucci_plus(dim, k) : OperatorSpec::pucci_minus(dim, k)).terms();
    } else {
      s.fail("kind", "must be laplacian, pucci_plus or pucci_minus");
    }
  } else {
    const std::size_t j = s.get<std::size_t>("j", 1);
    require_that(j >= 1 && j <= dim, s, "j", "must lie in [1, N]");
    op.terms = {OperatorTerm{1.0, j, parse_orientation(s, "orientation")}};
  }
  s.has("orientation");
  s.has("k");
  s.finish();
  return op;
}

SolverConfig parse_solver(const Section& s) {
  SolverConfig c;
  c.eps = s.get<double>("eps", c.eps);
  c.h = s.get<double>("h", c.eps / 2.0);
  c.tol = s.get<double>("tol", c.tol);
  if (s.has("max_iters")) c.max_iters = s.get<std::size_t>("max_iters", 0);
  const std::string mode = s.get<std::string>("sweep_mode", "policy");
  try {
    c.sweep_mode = sweep_mode_from_string(mode);
  } catch (const ConfigError&) {
    s.fail("sweep_mode", "must be jacobi, gauss_seidel or policy");
  }
  if (s.has("frames")) c.frames = s.get<std::size_t>("frames", 0);
  if (s.has("directions")) c.directions = s.get<std::size_t>("directions", 0);
  require_that(c.eps > 0.0, s, "eps", "must be positive");
  require_that(c.h > 0.0, s, "h", "must be positive");
  require_that(c.eps >= 2.0 * c.h * (1.0 - 1e-12), s, "eps", "must be at least 2h");
  require_that(c.tol > 0.0, s, "tol", "must be positive");
  require_that(!c.max_iters || *c.max_iters >= 1, s, "max_iters", "must be at least 1");
  require_that(!c.directions || *c.directions >= 1, s, "directions", "must be at least 1");
  s.finish();
  return c;
}

}  // namespace

std::size_t DomainConfig::dimension() const {
  if (type == "ball" || type == "ellipsoid") return center.size();
  if (type == "half_ball" || type == "polytope") return dim;
  if (type == "union_of_balls") return balls.empty() ? 0 : balls.front().center.size();
  if (type == "box") return lo.size();
  return 0;
}

ImplicitDomain DomainConfig::build() const {
  if (type == "ball") return ImplicitDomain::ball(center, radius);
  if (type == "half_ball") return ImplicitDomain::half_ball(dim, radius, cut_axis);
  if (type == "union_of_balls") return ImplicitDomain::union_of_balls(balls);
  if (type == "ellipsoid") return ImplicitDomain::ellipsoid(center, semi_axes);
  if (type == "polytope") return ImplicitDomain::polytope(dim, faces);
  if (type == "box") return ImplicitDomain::box(lo, hi);
  throw ConfigError("unknown domain type '" + type + "'");
}

BoundaryDatum DatumConfig::build() const {
  BoundaryDatum g = [&] {
    if (type == "polynomial") return BoundaryDatum::polynomial(terms);
    if (type == "peak") return BoundaryDatum::peak(center, radius, height);
    if (type == "constant") return BoundaryDatum::constant(value);
    if (type == "affine") return BoundaryDatum::affine(slope, intercept);
    throw ConfigError("unknown datum type '" + type + "'");
  }();
  return negate ? g.negated() : g;
}

OperatorSpec OperatorConfig::build(std::size_t dim) const { return OperatorSpec(dim, terms); }

SolveOptions ExperimentConfig::solve_options(std::size_t dim) const {
  SolveOptions o;
  o.eps = solver.eps;
  o.h = solver.h;
  o.tol = solver.tol;
  o.max_iters = solver.max_iters;
  o.sweep_mode = solver.sweep_mode;
  SamplingBudget b = default_dpp_budget(dim, seed);
  if (solver.frames) b.frames = *solver.frames;
  if (solver.directions) b.directions = *solver.directions;
  o.budget = b;
  return o;
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& command) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigIssue("<document>", e.mark.line + 1, e.msg);
  }
  if (!root || root.IsNull()) throw ConfigIssue("<document>", 0, "empty configuration");
  const Section top(root, "");
  ExperimentConfig c;
  c.command = top.get<std::string>("command", command);
  if (!command.empty() && c.command != command)
    top.fail("command", "file is for '" + c.command + "' but '" + command + "' was requested");
  if (!kCommands.count(c.command)) top.fail("command", "unknown command '" + c.command + "'");
  c.seed = top.get<std::uint64_t>("seed", 1);

  const bool needs_domain = c.command != "mvp-check";
  if (needs_domain || top.has("domain")) c.domain = parse_domain(top.sub("domain"));
  const std::size_t dim = c.domain.dimension();
  const bool needs_datum = c.command == "solve" || c.command == "simulate" || c.command == "envelope";
  if (needs_datum || top.has("datum")) c.datum = parse_datum(top.sub("datum"), dim);
  if (needs_datum || top.has("operator")) c.op = parse_operator(top.sub("operator"), dim);
  c.solver = parse_solver(top.sub("solver"));

  {
    const Section s = top.sub("game");
    c.game.x0 = s.get<Vec>("x0", Vec(dim, 0.0));
    c.game.games = s.get<std::size_t>("games", c.game.games);
    c.game.step_cap = s.get<std::size_t>("step_cap", c.game.step_cap);
    c.game.eta = s.get<double>("eta", 0.0);
    c.game.transcript = s.get<std::string>("transcript", "");
    if (c.command == "simulate") require_that(c.game.x0.size() == dim, s, "x0", "dimension mismatch with the domain");
    require_that(c.game.games >= 1, s, "games", "must be at least 1");
    require_that(c.game.step_cap >= 1, s, "step_cap", "must be at least 1");
    require_that(c.game.eta >= 0.0, s, "eta", "must be nonnegative");
    s.finish();
  }
  {
    const Section s = top.sub("check");
    c.check.j = s.get<std::size_t>("j", 1);
    c.check.point = s.get<Vec>("point", {});
    c.check.direction = s.get<Vec>("direction", {});
    c.check.r = s.get<double>("r", c.check.r);
    c.check.deltas = s.get<std::vector<double>>("deltas", {});
    c.check.conditions = s.get<std::vector<std::string>>("conditions", c.check.conditions);
    c.check.points = s.get<std::size_t>("points", c.check.points);
    c.check.subspaces = s.get<std::size_t>("subspaces", c.check.subspaces);
    c.check.directions = s.get<std::size_t>("directions", c.check.directions);
    if (c.command == "check-domain") {
      require_that(c.check.j >= 1 && c.check.j <= dim, s, "j", "must lie in [1, N]");
      require_that(c.check.point.empty() || c.check.point.size() == dim, s, "point", "dimension mismatch");
      require_that(c.check.direction.empty() || c.check.direction.size() == dim, s, "direction", "dimension mismatch");
      require_that(!c.check.point.empty() || !c.check.direction.empty(), s, "point", "give point or direction");
    }
    require_that(c.check.r > 0.0, s, "r", "must be positive");
    for (double d : c.check.deltas) require_that(d > 0.0 && d <= c.check.r, s, "deltas", "entries must lie in (0, r]");
    for (const auto& name : c.check.conditions)
      require_that(name == "G" || name == "F" || name == "H", s, "conditions", "entries must be G, F or H");
    require_that(c.check.directions >= 1, s, "directions", "must be at least 1");
    s.finish();
  }
  {
    const Section s = top.sub("envelope");
    c.envelope.cloud_points = s.get<std::size_t>("cloud_points", c.envelope.cloud_points);
    c.envelope.kind = s.get<std::string>("kind", c.envelope.kind);
    c.envelope.queries = s.get<std::vector<Vec>>("queries", {});
    c.envelope.membership_slices = s.get<std::size_t>("membership_slices", 0);
    c.envelope.j = s.get<std::size_t>("j", c.op.terms.empty() ? 1 : c.op.terms.front().j);
    require_that(c.envelope.kind == "convex" || c.envelope.kind == "concave", s, "kind", "must be convex or concave");
    require_that(c.envelope.cloud_points >= dim + 1 || c.command != "envelope", s, "cloud_points", "needs at least N+1 points");
    for (const Vec& q : c.envelope.queries) require_that(q.size() == dim, s, "queries", "dimension mismatch");
    s.finish();
  }
  {
    const Section s = top.sub("mvp");
    c.mvp.function = s.get<std::string>("function", c.mvp.function);
    c.mvp.js = s.get<std::vector<std::size_t>>("j", {});
    c.mvp.schedule = s.get<std::vector<double>>("schedule", c.mvp.schedule);
    c.mvp.orientation = s.get<std::string>("orientation", c.mvp.orientation);
    require_that(!c.mvp.schedule.empty(), s, "schedule", "must not be empty");
    for (std::size_t k = 0; k < c.mvp.schedule.size(); ++k) {
      require_that(c.mvp.schedule[k] > 0.0, s, "schedule", "entries must be positive");
      require_that(k == 0 || c.mvp.schedule[k] < c.mvp.schedule[k - 1], s, "schedule", "must be strictly decreasing");
    }
    require_that(c.mvp.orientation == "min_max" || c.mvp.orientation == "max_min", s, "orientation",
                 "must be min_max or max_min");
    s.finish();
  }
  {
    const Section s = top.sub("output");
    c.output.dir = s.get<std::string>("dir", c.output.dir);
    c.output.field_csv = s.get<std::string>("field_csv", c.output.field_csv);
    c.output.summary_json = s.get<std::string>("summary_json", c.output.summary_json);
    c.output.config_echo = s.get<std::string>("config_echo", c.output.config_echo);
    c.output.table_csv = s.get<std::string>("table_csv", c.output.table_csv);
    s.finish();
  }
  top.finish();
  return c;
}

ExperimentConfig load_config(const std::string& path, const std::string& command) {
  std::ifstream in(path);
  if (!in) throw ConfigIssue("<file>", 0, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), command);
}

namespace {

YAML::Node vec_node(const Vec& v) {
  YAML::Node n(YAML::NodeType::Sequence);
  for (double x : v) n.push_back(x);
  n.SetStyle(YAML::EmitterStyle::Flow);
  return n;
}

}  // namespace

std::string to_yaml(const ExperimentConfig& c) {
  YAML::Node root;
  root["command"] = c.command;
  root["seed"] = c.seed;
  if (c.domain.dimension() > 0) {
    YAML::Node d;
    const DomainConfig& dc = c.domain;
    d["type"] = dc.type;
    if (dc.type == "ball") {
      d["center"] = vec_node(dc.center);
      d["radius"] = dc.radius;
    } else if (dc.type == "half_ball") {
      d["dim"] = dc.dim;
      d["radius"] = dc.radius;
      d["cut_axis"] = dc.cut_axis;
    } else if (dc.type == "union_of_balls") {
      for (const BallSpec& b : dc.balls) {
        YAML::Node bn;
        bn["center"] = vec_node(b.center);
        bn["radius"] = b.radius;
        d["balls"].push_back(bn);
      }
    } else if (dc.type == "ellipsoid") {
      d["center"] = vec_node(dc.center);
      d["semi_axes"] = vec_node(dc.semi_axes);
    } else if (dc.type == "polytope") {
      d["dim"] = dc.dim;
      for (const HalfSpace& h : dc.faces) {
        YAML::Node f;
        f["normal"] = vec_node(h.normal);
        f["offset"] = h.offset;
        d["faces"].push_back(f);
      }
    } else if (dc.type == "box") {
      d["lo"] = vec_node(dc.lo);
      d["hi"] = vec_node(dc.hi);
    }
    root["domain"] = d;

    YAML::Node g;
    const DatumConfig& gc = c.datum;
    g["type"] = gc.type;
    if (gc.type == "polynomial") {
      for (const Monomial& m : gc.terms) {
        YAML::Node t;
        t["coef"] = m.coef;
        YAML::Node p(YAML::NodeType::Sequence);
        for (int e : m.powers) p.push_back(e);
        p.SetStyle(YAML::EmitterStyle::Flow);
        t["powers"] = p;
        g["terms"].push_back(t);
      }
    } else if (gc.type == "peak") {
      g["center"] = vec_node(gc.center);
      g["radius"] = gc.radius;
      g["height"] = gc.height;
    } else if (gc.type == "constant") {
      g["value"] = gc.value;
    } else if (gc.type == "affine") {
      g["slope"] = vec_node(gc.slope);
      g["intercept"] = gc.intercept;
    }
    g["negate"] = gc.negate;
    if (!gc.terms.empty() || gc.type != "polynomial") root["datum"] = g;

    if (!c.op.terms.empty()) {
      YAML::Node op;
      for (const OperatorTerm& t : c.op.terms) {
        YAML::Node tn;
        tn["weight"] = t.weight;
        tn["j"] = t.j;
        tn["orientation"] = to_string(t.orientation);
        op["terms"].push_back(tn);
      }
      root["operator"] = op;
    }
  }
  YAML::Node s;
  s["eps"] = c.solver.eps;
  s["h"] = c.solver.h;
  s["tol"] = c.solver.tol;
  if (c.solver.max_iters) s["max_iters"] = *c.solver.max_iters;
  s["sweep_mode"] = to_string(c.solver.sweep_mode);
  if (c.solver.frames) s["frames"] = *c.solver.frames;
  if (c.solver.directions) s["directions"] = *c.solver.directions;
  root["solver"] = s;

  YAML::Node game;
  game["x0"] = vec_node(c.game.x0);
  game["games"] = c.game.games;
  game["step_cap"] = c.game.step_cap;
  game["eta"] = c.game.eta;
  game["transcript"] = c.game.transcript;
  root["game"] = game;

  YAML::Node chk;
  chk["j"] = c.check.j;
  chk["point"] = vec_node(c.check.point);
  chk["direction"] = vec_node(c.check.direction);
  chk["r"] = c.check.r;
  chk["deltas"] = vec_node(c.check.deltas);
  YAML::Node conds(YAML::NodeType::Sequence);
  for (const auto& n : c.check.conditions) conds.push_back(n);
  conds.SetStyle(YAML::EmitterStyle::Flow);
  chk["conditions"] = conds;
  chk["points"] = c.check.points;
  chk["subspaces"] = c.check.subspaces;
  chk["directions"] = c.check.directions;
  root["check"] = chk;

  YAML::Node env;
  env["cloud_points"] = c.envelope.cloud_points;
  env["kind"] = c.envelope.kind;
  YAML::Node qs(YAML::NodeType::Sequence);
  for (const Vec& q : c.envelope.queries) qs.push_back(vec_node(q));
  env["queries"] = qs;
  env["membership_slices"] = c.envelope.membership_slices;
  env["j"] = c.envelope.j;
  root["envelope"] = env;

  YAML::Node mvp;
  mvp["function"] = c.mvp.function;
  YAML::Node js(YAML::NodeType::Sequence);
  for (std::size_t j : c.mvp.js) js.push_back(j);
  js.SetStyle(YAML::EmitterStyle::Flow);
  mvp["j"] = js;
  mvp["schedule"] = vec_node(c.mvp.schedule);
  mvp["orientation"] = c.mvp.orientation;
  root["mvp"] = mvp;

  YAML::Node out;
  out["dir"] = c.output.dir;
  out["field_csv"] = c.output.field_csv;
  out["summary_json"] = c.output.summary_json;
  out["config_echo"] = c.output.config_echo;
  out["table_csv"] = c.output.table_csv;
  root["output"] = out;

  YAML::Emitter em;
  em.SetDoublePrecision(17);
  em << root;
  return std::string(em.c_str()) + "\n";
}

}  // namespace hessgame::cli
