#include "hessgame/dpp.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "hessgame/errors.hpp"

namespace hessgame {

namespace {

std::size_t pool_index(std::vector<Vec>& pool, const Vec& v) {
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (std::abs(std::abs(dot(pool[i], v)) - 1.0) < 1e-14) return i;
  pool.push_back(v);
  return pool.size() - 1;
}

void check_step(double eps, double h) {
  if (!(eps > 0.0)) throw ConfigError("step eps must be positive");
  if (eps < 2.0 * h * (1.0 - 1e-12))
    throw ConfigError("step eps must be at least twice the grid spacing h");
}

}  // namespace

std::string to_string(SweepMode m) {
  switch (m) {
    case SweepMode::jacobi: return "jacobi";
    case SweepMode::gauss_seidel: return "gauss_seidel";
    case SweepMode::policy: return "policy";
  }
  return "?";
}

SweepMode sweep_mode_from_string(const std::string& s) {
  if (s == "jacobi") return SweepMode::jacobi;
  if (s == "gauss_seidel") return SweepMode::gauss_seidel;
  if (s == "policy") return SweepMode::policy;
  throw ConfigError("unknown sweep_mode '" + s + "' (expected jacobi, gauss_seidel or policy)");
}

SamplingBudget default_dpp_budget(std::size_t dim, std::uint64_t seed) {
  SamplingBudget b;
  b.frames = dim <= 2 ? 32 : 64;
  b.directions = dim <= 2 ? 16 : 32;
  b.seed = seed;
  return b;
}

namespace {

Rng term_rng(const SamplingBudget& budget, std::size_t term) { return Rng(sub_seed(budget.seed, 1000 + term)); }

std::vector<SubspaceFrame> term_frames_with(std::size_t n, std::size_t j, const SamplingBudget& budget,
                                            Rng& rng) {
  if (j == n) return coordinate_frames(n, n);
  std::vector<SubspaceFrame> frames = coordinate_frames(n, j);
  for (std::size_t k = 0; k < budget.frames; ++k) frames.push_back(random_frame(n, j, rng));
  return frames;
}

}  // namespace

std::vector<SubspaceFrame> dpp_term_frames(std::size_t n, std::size_t j, const SamplingBudget& budget,
                                           std::size_t term) {
  Rng rng = term_rng(budget, term);
  return term_frames_with(n, j, budget, rng);
}

DppSampleSet build_sample_set(const OperatorSpec& spec, const SamplingBudget& budget) {
  const std::size_t n = spec.dim();
  DppSampleSet set;
  for (std::size_t t = 0; t < spec.terms().size(); ++t) {
    Rng rng = term_rng(budget, t);
    const std::vector<SubspaceFrame> frames = term_frames_with(n, spec.terms()[t].j, budget, rng);
    std::vector<std::vector<std::size_t>> term_frames;
    for (const SubspaceFrame& f : frames) {
      std::vector<std::size_t> dirs;
      for (const Vec& d : frame_directions(f, budget.directions, rng)) {
        const std::size_t idx = pool_index(set.pool, d);
        if (std::find(dirs.begin(), dirs.end(), idx) == dirs.end()) dirs.push_back(idx);
      }
      term_frames.push_back(std::move(dirs));
    }
    set.frames.push_back(std::move(term_frames));
  }
  return set;
}

double combine_averages(const OperatorSpec& spec, const DppSampleSet& samples,
                        std::span<const double> averages, TermChoice* choice) {
  double total = 0.0;
  if (choice) choice->resize(spec.terms().size());
  for (std::size_t t = 0; t < spec.terms().size(); ++t) {
    const bool min_max = spec.terms()[t].orientation == Orientation::min_max;
    double outer = min_max ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
    std::size_t outer_dir = 0;
    for (const auto& frame : samples.frames[t]) {
      double inner = min_max ? -std::numeric_limits<double>::infinity()
                             : std::numeric_limits<double>::infinity();
      std::size_t inner_dir = frame.front();
      for (std::size_t d : frame) {
        const double a = averages[d];
        if (min_max ? a > inner : a < inner) {
          inner = a;
          inner_dir = d;
        }
      }
      if (min_max ? inner < outer : inner > outer) {
        outer = inner;
        outer_dir = inner_dir;
      }
    }
    total += spec.terms()[t].weight * outer;
    if (choice) (*choice)[t] = outer_dir;
  }
  return total;
}

double dpp_apply_at(const GridField& field, const ImplicitDomain& domain, const BoundaryDatum& g,
                    std::span<const double> x, double eps, const OperatorSpec& spec,
                    const SamplingBudget& budget) {
  check_step(eps, field.max_spacing());
  if (spec.dim() != domain.dim() || field.dim() != domain.dim())
    throw InputError("dimension mismatch between field, domain and operator");
  if (!domain.inside(x)) throw InputError("dpp_apply_at needs a point inside the domain");
  const DppSampleSet samples = build_sample_set(spec, budget);
  const auto value = [&](const Vec& p) { return domain.inside(p) ? field.eval(p) : g(p); };
  std::vector<double> averages(samples.pool.size());
  for (std::size_t d = 0; d < samples.pool.size(); ++d) {
    const Vec plus = axpy(eps, samples.pool[d], x);
    const Vec minus = axpy(-eps, samples.pool[d], x);
    averages[d] = 0.5 * (value(plus) + value(minus));
  }
  return combine_averages(spec, samples, averages);
}

// ---------------------------------------------------------------------------

struct DppOperator::Impl {
  struct StencilEntry {
    std::ptrdiff_t offset;
    double weight;
  };

  std::size_t dim = 0;
  std::vector<std::size_t> counts;
  std::vector<std::size_t> strides;
  Vec lo;
  Vec spacing;
  double eps = 0.0;

  std::vector<std::size_t> interior;        // ordinal -> node
  std::vector<std::int64_t> ordinal_of;     // node -> ordinal or -1
  std::vector<std::vector<StencilEntry>> stencils;  // point p = 2*d + (minus ? 1 : 0)
  std::vector<Vec> point_offsets;           // eps * (+-direction)

  // Exterior points per interior node (CSR by ordinal, sorted by point index).
  std::vector<std::uint32_t> ext_begin;
  std::vector<std::uint32_t> ext_point;
  std::vector<double> ext_value;
  // Nodes whose stencils reach outside the lattice; evaluated generically.
  std::vector<std::uint8_t> generic;

  Vec node_point(std::size_t i) const {
    Vec x(dim);
    for (std::size_t k = 0; k < dim; ++k)
      x[k] = lo[k] + static_cast<double>((i / strides[k]) % counts[k]) * spacing[k];
    return x;
  }

  // Generic multilinear evaluation of lattice data u at x; mirrors GridField::eval.
  void generic_stencil(std::span<const double> x, std::vector<std::pair<std::size_t, double>>& out) const {
    out.clear();
    std::size_t base = 0;
    double frac[16];
    for (std::size_t k = 0; k < dim; ++k) {
      const double t = (x[k] - lo[k]) / spacing[k];
      auto ik = static_cast<std::ptrdiff_t>(std::floor(t));
      ik = std::clamp<std::ptrdiff_t>(ik, 0, static_cast<std::ptrdiff_t>(counts[k]) - 2);
      frac[k] = std::clamp(t - static_cast<double>(ik), 0.0, 1.0);
      base += static_cast<std::size_t>(ik) * strides[k];
    }
    for (std::size_t c = 0; c < (std::size_t{1} << dim); ++c) {
      std::size_t idx = base;
      double w = 1.0;
      for (std::size_t k = 0; k < dim; ++k) {
        if (c & (std::size_t{1} << k)) {
          idx += strides[k];
          w *= frac[k];
        } else {
          w *= 1.0 - frac[k];
        }
      }
      if (w != 0.0) out.emplace_back(idx, w);
    }
  }

  // Values of u at all node +- eps*d points for the given ordinal.
  void point_values(std::span<const double> u, std::size_t ordinal, std::span<double> vals) const {
    const std::size_t node = interior[ordinal];
    std::uint32_t cursor = ext_begin[ordinal];
    const std::uint32_t end = ext_begin[ordinal + 1];
    const std::size_t npoints = stencils.size();
    if (generic[ordinal]) {
      thread_local std::vector<std::pair<std::size_t, double>> st;
      const Vec x = node_point(node);
      for (std::size_t p = 0; p < npoints; ++p) {
        if (cursor < end && ext_point[cursor] == p) {
          vals[p] = ext_value[cursor++];
          continue;
        }
        generic_stencil(axpy(1.0, point_offsets[p], x), st);
        double s = 0.0;
        for (const auto& [idx, w] : st) s += w * u[idx];
        vals[p] = s;
      }
      return;
    }
    for (std::size_t p = 0; p < npoints; ++p) {
      if (cursor < end && ext_point[cursor] == p) {
        vals[p] = ext_value[cursor++];
        continue;
      }
      double s = 0.0;
      for (const StencilEntry& e : stencils[p])
        s += e.weight * u[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(node) + e.offset)];
      vals[p] = s;
    }
  }
};

DppOperator::DppOperator(const GridField& lattice, const ImplicitDomain& domain,
                         const BoundaryDatum& g, double eps, OperatorSpec spec,
                         const SamplingBudget& budget)
    : impl_(std::make_unique<Impl>()), spec_(std::move(spec)), samples_(build_sample_set(spec_, budget)) {
  check_step(eps, lattice.max_spacing());
  if (spec_.dim() != domain.dim() || lattice.dim() != domain.dim())
    throw InputError("dimension mismatch between lattice, domain and operator");
  Impl& m = *impl_;
  m.dim = lattice.dim();
  m.counts = lattice.counts();
  m.strides = lattice.strides();
  m.lo = lattice.box().lo;
  m.spacing = lattice.spacing();
  m.eps = eps;
  m.interior = lattice.interior_nodes();
  m.ordinal_of.assign(lattice.size(), -1);
  for (std::size_t r = 0; r < m.interior.size(); ++r)
    m.ordinal_of[m.interior[r]] = static_cast<std::int64_t>(r);

  // Relative stencils for every +-eps*d offset.
  for (const Vec& d : samples_.pool)
    for (double sign : {1.0, -1.0}) {
      Vec off(m.dim);
      std::vector<std::ptrdiff_t> fl(m.dim);
      Vec frac(m.dim);
      for (std::size_t k = 0; k < m.dim; ++k) {
        off[k] = sign * eps * d[k];
        const double t = off[k] / m.spacing[k];
        fl[k] = static_cast<std::ptrdiff_t>(std::floor(t));
        frac[k] = t - static_cast<double>(fl[k]);
      }
      std::vector<Impl::StencilEntry> st;
      for (std::size_t c = 0; c < (std::size_t{1} << m.dim); ++c) {
        std::ptrdiff_t rel = 0;
        double w = 1.0;
        for (std::size_t k = 0; k < m.dim; ++k) {
          const bool up = (c >> k) & 1U;
          rel += (fl[k] + (up ? 1 : 0)) * static_cast<std::ptrdiff_t>(m.strides[k]);
          w *= up ? frac[k] : 1.0 - frac[k];
        }
        if (w != 0.0) st.push_back({rel, w});
      }
      m.stencils.push_back(std::move(st));
      m.point_offsets.push_back(std::move(off));
    }

  // Classify every node +- offset point once.
  const std::size_t npoints = m.stencils.size();
  m.ext_begin.assign(m.interior.size() + 1, 0);
  m.generic.assign(m.interior.size(), 0);
  g_min_ = std::numeric_limits<double>::infinity();
  g_max_ = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (!lattice.is_interior(i)) {
      const double gv = g(lattice.node_point(i));
      g_min_ = std::min(g_min_, gv);
      g_max_ = std::max(g_max_, gv);
    }
  Vec p(m.dim);
  for (std::size_t r = 0; r < m.interior.size(); ++r) {
    const std::size_t node = m.interior[r];
    const Vec x = m.node_point(node);
    const auto idx = lattice.multi_index(node);
    for (std::size_t q = 0; q < npoints; ++q) {
      for (std::size_t k = 0; k < m.dim; ++k) p[k] = x[k] + m.point_offsets[q][k];
      if (!domain.inside(p)) {
        const double gv = g(p);
        g_min_ = std::min(g_min_, gv);
        g_max_ = std::max(g_max_, gv);
        m.ext_point.push_back(static_cast<std::uint32_t>(q));
        m.ext_value.push_back(gv);
        continue;
      }
      // Stencil corners must stay on the lattice for the fast path.
      for (const auto& e : m.stencils[q]) {
        const auto target = static_cast<std::ptrdiff_t>(node) + e.offset;
        bool ok = target >= 0 && target < static_cast<std::ptrdiff_t>(lattice.size());
        if (ok) {
          // Per-axis range check (a linear index can wrap across rows).
          std::size_t rem = static_cast<std::size_t>(target);
          for (std::size_t k = m.dim; k-- > 0;) {
            const std::size_t tk = rem / m.strides[k];
            rem %= m.strides[k];
            const double expected = static_cast<double>(idx[k]) + m.point_offsets[q][k] / m.spacing[k];
            if (std::abs(static_cast<double>(tk) - expected) > 1.0 + 1e-9) ok = false;
          }
        }
        if (!ok) m.generic[r] = 1;
      }
    }
    m.ext_begin[r + 1] = static_cast<std::uint32_t>(m.ext_point.size());
  }
  if (m.ext_point.size() > std::numeric_limits<std::uint32_t>::max())
    throw ConfigError("too many exterior stencil points");
}

DppOperator::~DppOperator() = default;
DppOperator::DppOperator(DppOperator&&) noexcept = default;
DppOperator& DppOperator::operator=(DppOperator&&) noexcept = default;

std::size_t DppOperator::interior_count() const { return impl_->interior.size(); }

double DppOperator::apply(std::span<const double> u, std::size_t ordinal, TermChoice* choice) const {
  const Impl& m = *impl_;
  thread_local std::vector<double> vals;
  thread_local std::vector<double> averages;
  vals.resize(m.stencils.size());
  averages.resize(samples_.pool.size());
  m.point_values(u, ordinal, vals);
  for (std::size_t d = 0; d < averages.size(); ++d) averages[d] = 0.5 * (vals[2 * d] + vals[2 * d + 1]);
  return combine_averages(spec_, samples_, averages, choice);
}

void DppOperator::apply_all(std::span<const double> u, std::span<double> out) const {
  std::copy(u.begin(), u.end(), out.begin());
  for (std::size_t r = 0; r < impl_->interior.size(); ++r) out[impl_->interior[r]] = apply(u, r);
}

double DppOperator::residual(std::span<const double> u) const {
  double res = 0.0;
  for (std::size_t r = 0; r < impl_->interior.size(); ++r)
    res = std::max(res, std::abs(apply(u, r) - u[impl_->interior[r]]));
  return res;
}

DppOperator::LinearRow DppOperator::linear_row(std::size_t ordinal, const TermChoice& choice,
                                               std::span<const double> exterior_values) const {
  const Impl& m = *impl_;
  LinearRow row;
  const std::size_t node = m.interior[ordinal];
  const std::uint32_t begin = m.ext_begin[ordinal];
  const std::uint32_t end = m.ext_begin[ordinal + 1];
  thread_local std::vector<std::pair<std::size_t, double>> st;
  const auto add_node = [&](std::size_t idx, double w) {
    const std::int64_t ord = m.ordinal_of[idx];
    if (ord >= 0)
      row.coeffs.emplace_back(static_cast<std::size_t>(ord), w);
    else
      row.rhs += w * exterior_values[idx];
  };
  for (std::size_t t = 0; t < choice.size(); ++t) {
    const double alpha = spec_.terms()[t].weight;
    for (std::size_t s = 0; s < 2; ++s) {
      const std::size_t p = 2 * choice[t] + s;
      const double w0 = 0.5 * alpha;
      const auto* hit = std::find(m.ext_point.data() + begin, m.ext_point.data() + end,
                                  static_cast<std::uint32_t>(p));
      if (hit != m.ext_point.data() + end) {
        row.rhs += w0 * m.ext_value[static_cast<std::size_t>(hit - m.ext_point.data())];
        continue;
      }
      if (m.generic[ordinal]) {
        m.generic_stencil(axpy(1.0, m.point_offsets[p], m.node_point(node)), st);
        for (const auto& [idx, w] : st) add_node(idx, w0 * w);
      } else {
        for (const auto& e : m.stencils[p])
          add_node(static_cast<std::size_t>(static_cast<std::ptrdiff_t>(node) + e.offset), w0 * e.weight);
      }
    }
  }
  return row;
}

// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

struct SolverState {
  const DppOperator& op;
  const std::vector<std::size_t>& interior;
  std::vector<double>& u;
  SolveReport& report;
  std::size_t max_iters;
  double tol;
};

// Returns true once converged. Alternating-direction in-place sweeps; the
// true residual is only evaluated when the sweep change drops below tol.
bool run_gauss_seidel(SolverState& s) {
  bool forward = true;
  while (s.report.iterations < s.max_iters) {
    double change = 0.0;
    const std::size_t n = s.interior.size();
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t r = forward ? k : n - 1 - k;
      const double v = s.op.apply(s.u, r);
      change = std::max(change, std::abs(v - s.u[s.interior[r]]));
      s.u[s.interior[r]] = v;
    }
    forward = !forward;
    ++s.report.iterations;
    s.report.residual = change;
    if (change <= s.tol && s.report.iterations < s.max_iters) {
      s.report.residual = s.op.residual(s.u);
      ++s.report.iterations;
      if (s.report.residual <= s.tol) return true;
    }
  }
  s.report.residual = s.op.residual(s.u);
  return s.report.residual <= s.tol;
}

bool run_jacobi(SolverState& s) {
  std::vector<double> next(s.u.size());
  while (s.report.iterations < s.max_iters) {
    s.op.apply_all(s.u, next);
    ++s.report.iterations;
    double res = 0.0;
    for (std::size_t i : s.interior) res = std::max(res, std::abs(next[i] - s.u[i]));
    s.report.residual = res;
    if (res <= s.tol) return true;
    s.u.swap(next);
  }
  s.report.residual = s.op.residual(s.u);
  return s.report.residual <= s.tol;
}

double evaluate_policy(SolverState& s, std::vector<TermChoice>& policy) {
  double res = 0.0;
  for (std::size_t r = 0; r < s.interior.size(); ++r) {
    const double v = s.op.apply(s.u, r, &policy[r]);
    res = std::max(res, std::abs(v - s.u[s.interior[r]]));
  }
  ++s.report.iterations;
  s.report.residual = res;
  return res;
}

bool solve_frozen(SolverState& s, const std::vector<TermChoice>& policy, Eigen::VectorXd& sol) {
  using SpMat = Eigen::SparseMatrix<double, Eigen::RowMajor>;
  const std::size_t n = s.interior.size();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(n * 9);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
  Eigen::VectorXd guess(static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = s.op.linear_row(r, policy[r], s.u);
    trip.emplace_back(static_cast<int>(r), static_cast<int>(r), 1.0);
    for (const auto& [c, w] : row.coeffs) trip.emplace_back(static_cast<int>(r), static_cast<int>(c), -w);
    rhs[static_cast<Eigen::Index>(r)] = row.rhs;
    guess[static_cast<Eigen::Index>(r)] = s.u[s.interior[r]];
  }
  SpMat a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  a.setFromTriplets(trip.begin(), trip.end());
  trip.clear();
  trip.shrink_to_fit();

  bool ok = false;
  if (n <= 60000) {
    Eigen::SparseMatrix<double> ac = a;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(ac);
    if (lu.info() == Eigen::Success) {
      sol = lu.solve(rhs);
      ok = lu.info() == Eigen::Success;
    }
  } else {
    Eigen::BiCGSTAB<SpMat, Eigen::IncompleteLUT<double>> solver;
    solver.preconditioner().setDroptol(1e-4);
    solver.preconditioner().setFillfactor(4);
    solver.setTolerance(1e-13);
    solver.setMaxIterations(2000);
    solver.compute(a);
    if (solver.info() == Eigen::Success) {
      sol = solver.solveWithGuess(rhs, guess);
      s.report.linear_iterations += static_cast<std::size_t>(solver.iterations());
      ok = solver.info() == Eigen::Success || solver.error() < 1e-10;
    }
  }
  return ok && sol.allFinite();
}

// Policy iteration: freeze the argmin/argmax choices and solve the linear
// system. Stops when the best residual has not halved for `patience` steps.
bool run_policy(SolverState& s) {
  const std::size_t n = s.interior.size();
  constexpr int patience = 12;
  std::vector<TermChoice> policy(n);
  double res = evaluate_policy(s, policy);
  double best_res = res;
  double mark = res;
  std::vector<double> best_u = s.u;
  int idle = 0;
  Eigen::VectorXd sol;
  while (res > s.tol && s.report.iterations < s.max_iters && idle < patience) {
    if (!solve_frozen(s, policy, sol)) break;
    for (std::size_t r = 0; r < n; ++r) s.u[s.interior[r]] = sol[static_cast<Eigen::Index>(r)];
    res = evaluate_policy(s, policy);
    if (res < best_res) {
      best_res = res;
      best_u = s.u;
    }
    if (best_res < 0.5 * mark) {
      mark = best_res;
      idle = 0;
    } else {
      ++idle;
    }
  }
  if (res <= s.tol) return true;
  s.u = best_u;
  return run_gauss_seidel(s);
}

}  // namespace

SolveResult dpp_solve(const ImplicitDomain& domain, const BoundaryDatum& g, const OperatorSpec& spec,
                      const SolveOptions& options) {
  const auto start = Clock::now();
  check_step(options.eps, options.h);
  if (!(options.tol > 0.0)) throw ConfigError("tolerance must be positive");
  const SamplingBudget budget = options.budget.value_or(default_dpp_budget(domain.dim()));

  GridField field(domain.bounding_box(), options.h);
  field.classify(domain);
  if (field.interior_nodes().empty()) throw ConfigError("grid has no interior nodes");
  const DppOperator op(field, domain, g, options.eps, spec, budget);

  for (std::size_t i = 0; i < field.size(); ++i)
    field.set_value(i, field.is_interior(i) ? op.g_min() : g(field.node_point(i)));

  SolveReport report;
  report.eps = options.eps;
  report.h = options.h;
  report.tol = options.tol;
  report.sweep_mode = options.sweep_mode;
  report.budget = budget;
  report.interior_nodes = field.interior_nodes().size();
  report.g_min = op.g_min();
  report.g_max = op.g_max();
  const double ratio = domain.diameter() / options.eps;
  report.max_iters = options.max_iters.value_or(static_cast<std::size_t>(std::ceil(50.0 * ratio * ratio)));

  std::vector<double> u(field.values().begin(), field.values().end());
  SolverState state{op, field.interior_nodes(), u, report, report.max_iters, options.tol};
  switch (options.sweep_mode) {
    case SweepMode::jacobi: report.converged = run_jacobi(state); break;
    case SweepMode::gauss_seidel: report.converged = run_gauss_seidel(state); break;
    case SweepMode::policy: report.converged = run_policy(state); break;
  }
  std::copy(u.begin(), u.end(), field.values().begin());

  const double slack = 1e-9 * std::max(1.0, report.g_max - report.g_min);
  for (std::size_t i : field.interior_nodes())
    if (u[i] < report.g_min - slack || u[i] > report.g_max + slack) report.bounds_ok = false;
  report.wall_time_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return {std::move(field), report};
}

bool monotonicity_check(const GridField& a, const GridField& b, const ImplicitDomain& domain,
                        const BoundaryDatum& g, double eps, const OperatorSpec& spec,
                        const SamplingBudget& budget) {
  if (!a.same_lattice(b)) throw InputError("monotonicity check needs fields on the same lattice");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.is_interior(i) != b.is_interior(i)) throw InputError("fields classify nodes differently");
    if (a.value(i) > b.value(i)) throw InputError("precondition A <= B violated");
    if (!a.is_interior(i) && a.value(i) != b.value(i))
      throw InputError("fields must share exterior data");
  }
  const DppOperator op(a, domain, g, eps, spec, budget);
  for (std::size_t r = 0; r < op.interior_count(); ++r)
    if (op.apply(a.values(), r) > op.apply(b.values(), r) + 1e-12) return false;
  return true;
}

}  // namespace hessgame
