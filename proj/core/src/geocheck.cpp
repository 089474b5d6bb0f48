#include "hessgame/geocheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hessgame/errors.hpp"
#include "hessgame/sampling.hpp"

namespace hessgame {

std::string to_string(VerdictStatus s) {
  return s == VerdictStatus::pass_at_budget ? "pass_at_budget" : "violation";
}

std::vector<double> default_delta_schedule(double r) { return {r / 2.0, r / 4.0, r / 8.0}; }

namespace {

void require_boundary_point(const ImplicitDomain& domain, std::span<const double> y) {
  if (y.size() != domain.dim()) throw InputError("boundary point has wrong dimension");
  const double phi = domain.level(y);
  if (!(std::abs(phi) <= 1e-8 * std::max(1.0, domain.diameter())))
    throw InputError("point is not on the boundary (|phi| = " + std::to_string(std::abs(phi)) + ")");
}

std::vector<double> resolve_deltas(std::vector<double> deltas, double r) {
  if (!(r > 0.0)) throw ConfigError("radius r must be positive");
  if (deltas.empty()) deltas = default_delta_schedule(r);
  for (double d : deltas)
    if (!(d > 0.0)) throw ConfigError("delta must be positive");
  std::sort(deltas.begin(), deltas.end(), std::greater<>());
  return deltas;
}

Vec inward_normal(const ImplicitDomain& domain, std::span<const double> y) {
  Vec g = domain.level_gradient(y);
  const double len = norm(g);
  if (len > 1e-12) return scaled(g, -1.0 / len);
  Vec d = sub(domain.witness(), y);
  return scaled(d, 1.0 / norm(d));
}

// Uniform point in the ball of radius `radius` of the span of `basis`.
Vec ball_point(const std::vector<Vec>& basis, std::size_t n, double radius, Rng& rng) {
  Vec out(n, 0.0);
  if (basis.empty()) return out;
  Vec c(basis.size());
  double len = 0.0;
  for (double& v : c) {
    v = gaussian(rng);
    len += v * v;
  }
  len = std::sqrt(len);
  const double rad = radius * std::pow(uniform01(rng), 1.0 / static_cast<double>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) out = axpy(rad * c[k] / len, basis[k], out);
  return out;
}

// Orthonormal basis of the complement of span(vectors) in R^n.
std::vector<Vec> complement_basis(const std::vector<Vec>& vectors, std::size_t n) {
  std::vector<Vec> all = vectors;
  std::vector<Vec> out;
  for (std::size_t k = 0; k < n; ++k) {
    Vec e = unit_axis(n, k);
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& b : all) e = axpy(-dot(e, b), b, e);
    const double len = norm(e);
    if (len > 1e-8) {
      e = scaled(e, 1.0 / len);
      all.push_back(e);
      out.push_back(e);
    }
    if (out.size() + vectors.size() == n) break;
  }
  return out;
}

// Points of B_delta(y) inside the domain: along the inward normal first, then uniform.
std::vector<Vec> near_points(const ImplicitDomain& domain, std::span<const double> y, double delta,
                             std::size_t count, Rng& rng) {
  const std::size_t n = domain.dim();
  const Vec inward = inward_normal(domain, y);
  std::vector<Vec> pts;
  for (double t : {0.9, 0.5, 0.25, 0.1, 0.01}) {
    Vec x = axpy(t * delta, inward, y);
    if (domain.inside(x)) pts.push_back(std::move(x));
  }
  std::vector<Vec> axes;
  for (std::size_t k = 0; k < n; ++k) axes.push_back(unit_axis(n, k));
  const Vec yv(y.begin(), y.end());
  for (std::size_t attempt = 0; pts.size() < count && attempt < 50 * count; ++attempt) {
    Vec x = axpy(1.0, ball_point(axes, n, delta, rng), yv);
    if (domain.inside(x)) pts.push_back(std::move(x));
  }
  return pts;
}

SubspaceFrame perturbed(const SubspaceFrame& f, double size, Rng& rng) {
  std::vector<Vec> v = f.basis();
  for (Vec& b : v)
    for (double& c : b) c += size * gaussian(rng);
  return SubspaceFrame::orthonormalize(f.ambient_dim(), std::move(v));
}

}  // namespace

bool line_family_hits(const ImplicitDomain& domain, std::span<const double> x, const std::vector<Vec>& frame,
                      std::span<const double> y, double r, std::size_t directions, std::uint64_t seed,
                      std::size_t* tested) {
  constexpr int samples = 64;
  const SubspaceFrame s(domain.dim(), frame);
  Rng rng(seed);
  const Vec xy = sub(x, y);
  const double c = dot(xy, xy) - r * r;
  std::size_t count = 0;
  bool hit = false;
  Vec p(x.size());
  for (const Vec& v : frame_directions(s, directions, rng)) {
    ++count;
    const double b = dot(v, xy);
    const double disc = b * b - c;
    if (disc <= 0.0) continue;
    const double root = std::sqrt(disc);
    const double lo = -b - root;
    const double hi = -b + root;
    for (int k = 0; k <= samples && !hit; ++k) {
      const double t = lo + (hi - lo) * (static_cast<double>(k) / samples);
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = x[i] + t * v[i];
      if (distance(p, y) <= r && domain.level(p) >= 0.0) hit = true;
    }
    if (hit) break;
  }
  if (tested) *tested = count;
  return hit;
}

ConditionVerdict check_G(const ImplicitDomain& domain, std::size_t j, std::span<const double> y, double r,
                         const GeoBudget& budget, std::vector<double> deltas) {
  const std::size_t n = domain.dim();
  if (j < 1 || j > n) throw ConfigError("index j must lie in [1, N]");
  require_boundary_point(domain, y);
  ConditionVerdict verdict;
  verdict.condition = "G";
  verdict.j = j;
  verdict.y.assign(y.begin(), y.end());
  verdict.r = r;
  verdict.deltas = resolve_deltas(std::move(deltas), r);
  verdict.budget = budget;

  Rng frame_rng(sub_seed(budget.seed, 1));
  std::vector<SubspaceFrame> frames = coordinate_frames(n, j);
  for (std::size_t k = 0; k < budget.subspaces; ++k) frames.push_back(random_frame(n, j, frame_rng));

  const auto confirmed = [&](const Vec& x, const SubspaceFrame& f, std::size_t dirs, std::uint64_t seed) {
    return !line_family_hits(domain, x, f.basis(), y, r, 4 * dirs, seed);
  };

  std::optional<ConditionWitness> witness;
  for (std::size_t di = 0; di < verdict.deltas.size(); ++di) {
    const double delta = verdict.deltas[di];
    Rng rng(sub_seed(budget.seed, 100 + di));
    const std::vector<Vec> pts = near_points(domain, y, delta, budget.points, rng);
    std::optional<ConditionWitness> found;
    // Hardest (x, frame) pairs: most directions needed before a hit.
    std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> hardest;
    for (std::size_t pi = 0; pi < pts.size() && !found; ++pi)
      for (std::size_t fi = 0; fi < frames.size() && !found; ++fi) {
        std::size_t tested = 0;
        const std::uint64_t seed = sub_seed(budget.seed, fi);
        if (line_family_hits(domain, pts[pi], frames[fi].basis(), y, r, budget.directions, seed, &tested)) {
          hardest.push_back({tested, {pi, fi}});
        } else if (confirmed(pts[pi], frames[fi], budget.directions, seed)) {
          found = ConditionWitness{pts[pi], frames[fi].basis(), r, delta, budget.directions};
        }
      }
    if (!found) {
      std::sort(hardest.begin(), hardest.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
      hardest.resize(std::min<std::size_t>(hardest.size(), 16));
      for (const auto& h : hardest) {
        const Vec& x = pts[h.second.first];
        for (int trial = 0; trial < 16 && !found; ++trial) {
          const SubspaceFrame f = perturbed(frames[h.second.second], 0.05, rng);
          const std::uint64_t seed = sub_seed(budget.seed, 5000 + static_cast<std::uint64_t>(trial));
          if (!line_family_hits(domain, x, f.basis(), y, r, budget.directions, seed) &&
              confirmed(x, f, budget.directions, seed))
            found = ConditionWitness{x, f.basis(), r, delta, budget.directions};
        }
        if (found) break;
      }
    }
    if (!found) {
      verdict.status = VerdictStatus::pass_at_budget;
      verdict.passed_delta = delta;
      return verdict;
    }
    witness = found;
  }
  verdict.status = VerdictStatus::violation;
  verdict.witness = witness;
  verdict.note = "no line of the witness frame meets the boundary inside B_r(y)";
  return verdict;
}

bool replay_G_witness(const ImplicitDomain& domain, const ConditionVerdict& verdict, std::size_t multiplier) {
  if (!verdict.witness) throw InputError("verdict carries no witness");
  const ConditionWitness& w = *verdict.witness;
  return !line_family_hits(domain, w.x, w.frame, verdict.y, w.r, multiplier * w.directions_tested,
                           sub_seed(verdict.budget.seed, 9000));
}

ConditionVerdict check_F(const ImplicitDomain& domain, std::size_t j, std::span<const double> y, double r,
                         const GeoBudget& budget, std::vector<double> deltas) {
  const std::size_t n = domain.dim();
  if (j < 1 || j > n) throw ConfigError("index j must lie in [1, N]");
  require_boundary_point(domain, y);
  ConditionVerdict verdict;
  verdict.condition = "F";
  verdict.j = j;
  verdict.y.assign(y.begin(), y.end());
  verdict.r = r;
  verdict.deltas = resolve_deltas(std::move(deltas), r);
  verdict.budget = budget;
  const Vec yv(y.begin(), y.end());
  const Vec inward = inward_normal(domain, y);

  // Candidate subspaces T.
  Rng rng(sub_seed(budget.seed, 2));
  std::vector<SubspaceFrame> frames = coordinate_frames(n, j);
  try {
    const CurvatureReport curv = principal_curvatures(domain, y);
    std::vector<Vec> basis{inward};
    for (std::size_t k = 0; k + 1 < j && k < curv.principal_directions.size(); ++k)
      basis.push_back(curv.principal_directions[curv.principal_directions.size() - 1 - k]);
    if (basis.size() == j) frames.push_back(SubspaceFrame::orthonormalize(n, basis));
  } catch (const SingularPointError&) {
  }
  const std::size_t random_frames = std::max<std::size_t>(4, budget.subspaces / 10);
  for (std::size_t k = 0; k < random_frames; ++k) {
    std::vector<Vec> basis{inward};
    for (std::size_t m = 1; m < j; ++m) basis.push_back(random_unit_vector(n, rng));
    frames.push_back(SubspaceFrame::orthonormalize(n, basis));
  }

  const std::size_t per_candidate = std::max<std::size_t>(budget.points, 16);
  std::optional<ConditionWitness> last_counterexample;

  // True when no sampled point of the trap set leaves B_delta(y).
  const auto certifies = [&](const SubspaceFrame& t, const Vec& v, double lambda, double theta, double delta,
                             Rng& srng) {
    std::vector<Vec> tangent;  // T minus v
    {
      std::vector<Vec> tb = t.basis();
      for (Vec& b : tb) {
        for (int pass = 0; pass < 2; ++pass) b = axpy(-dot(b, v), v, b);
        for (const Vec& q : tangent) b = axpy(-dot(b, q), q, b);
        const double len = norm(b);
        if (len > 1e-8) tangent.push_back(scaled(b, 1.0 / len));
        if (tangent.size() + 1 == j) break;
      }
    }
    const std::vector<Vec> normal_part = complement_basis(t.basis(), n);
    std::size_t accepted = 0;
    for (std::size_t s = 0; s < per_candidate; ++s) {
      const double u = uniform01(srng);
      const double along = s % 2 == 0 ? theta * u : -r + (theta + r) * u;
      Vec x = axpy(along, v, yv);
      x = axpy(1.0, ball_point(tangent, n, r, srng), x);
      x = axpy(1.0, ball_point(normal_part, n, lambda, srng), x);
      if (distance(x, yv) >= r || !domain.inside(x)) continue;
      ++accepted;
      if (distance(x, yv) >= delta) {
        last_counterexample = ConditionWitness{x, t.basis(), r, delta, 0};
        return false;
      }
    }
    return accepted > 0;
  };

  for (std::size_t di = 0; di < verdict.deltas.size(); ++di) {
    const double delta = verdict.deltas[di];
    if (delta >= r) continue;
    Rng srng(sub_seed(budget.seed, 200 + di));
    bool certified = false;
    for (std::size_t fi = 0; fi < frames.size() && !certified; ++fi) {
      std::vector<Vec> vs;
      if (frames[fi].distance_to(inward) < 1e-9) vs.push_back(inward);
      for (int k = 0; k < 4; ++k) {
        Vec c(j);
        for (double& x : c) x = gaussian(srng);
        Vec v = frames[fi].embed(c);
        vs.push_back(scaled(v, 1.0 / norm(v)));
      }
      for (const Vec& v : vs) {
        for (double lf : {1.0, 0.5, 0.25, 0.125}) {
          for (double tf : {0.5, 0.25, 0.125, 0.0625}) {
            if (certifies(frames[fi], v, lf * delta, tf * delta * delta, delta, srng)) {
              certified = true;
              break;
            }
          }
          if (certified) break;
        }
        if (certified) break;
      }
    }
    if (!certified) {
      verdict.status = VerdictStatus::violation;
      verdict.witness = last_counterexample;
      if (verdict.witness) verdict.witness->delta = delta;
      verdict.note = "no certificate at budget";
      return verdict;
    }
  }
  verdict.status = VerdictStatus::pass_at_budget;
  return verdict;
}

CurvatureReport principal_curvatures(const ImplicitDomain& domain, std::span<const double> y) {
  const std::size_t n = domain.dim();
  if (n < 2) throw InputError("curvatures need N >= 2");
  require_boundary_point(domain, y);
  const double s = 1e-4 * domain.diameter();
  Vec p(y.begin(), y.end());
  const auto phi_at = [&](std::initializer_list<std::pair<std::size_t, double>> moves) {
    Vec q = p;
    for (const auto& [k, d] : moves) q[k] += d;
    return domain.level(q);
  };
  const double f0 = domain.level(p);
  Vec grad(n);
  for (std::size_t k = 0; k < n; ++k) grad[k] = (phi_at({{k, s}}) - phi_at({{k, -s}})) / (2.0 * s);
  const double glen = norm(grad);
  if (!(glen > 1e-8)) throw SingularPointError("level function gradient vanishes at the point");

  // One-sided slopes along the axes and the normal must agree for a C^1 boundary.
  const Vec nrm = scaled(grad, 1.0 / glen);
  std::vector<Vec> probes;
  for (std::size_t k = 0; k < n; ++k) probes.push_back(unit_axis(n, k));
  probes.push_back(nrm);
  for (const Vec& d : probes) {
    const double fwd = (domain.level(axpy(s, d, p)) - f0) / s;
    const double bwd = (f0 - domain.level(axpy(-s, d, p))) / s;
    if (std::abs(fwd - bwd) > 0.05 * glen) throw SingularPointError("boundary has a kink at the point");
  }

  SymMatrix hess(n);
  for (std::size_t a = 0; a < n; ++a) {
    hess.set(a, a, (phi_at({{a, s}}) - 2.0 * f0 + phi_at({{a, -s}})) / (s * s));
    for (std::size_t b = a + 1; b < n; ++b)
      hess.set(a, b, (phi_at({{a, s}, {b, s}}) - phi_at({{a, s}, {b, -s}}) - phi_at({{a, -s}, {b, s}}) +
                      phi_at({{a, -s}, {b, -s}})) / (4.0 * s * s));
  }

  const std::vector<Vec> tangent = complement_basis({nrm}, n);
  SymMatrix shape(n - 1);
  for (std::size_t a = 0; a < n - 1; ++a)
    for (std::size_t b = a; b < n - 1; ++b) shape.set(a, b, dot(tangent[a], hess.apply(tangent[b])) / glen);
  const Eigensystem es = sym_eigensystem(shape);

  CurvatureReport rep;
  rep.y = p;
  rep.normal = nrm;
  rep.curvatures = es.values;
  for (const Vec& c : es.vectors) {
    Vec d(n, 0.0);
    for (std::size_t a = 0; a < n - 1; ++a) d = axpy(c[a], tangent[a], d);
    rep.principal_directions.push_back(std::move(d));
  }
  return rep;
}

bool check_H(const ImplicitDomain& domain, std::size_t j, std::span<const double> y) {
  const std::size_t n = domain.dim();
  if (j < 1 || j > n - 1 || n - j + 1 > n - 1)
    throw ConfigError("condition H needs kappa_j and kappa_{N-j+1}, both within [1, N-1]");
  const CurvatureReport rep = principal_curvatures(domain, y);
  return rep.curvatures[j - 1] > 1e-8 && rep.curvatures[n - j] > 1e-8;
}

namespace {

void check_barrier_args(std::span<const double> kappa, std::size_t j, double eta) {
  const std::size_t n = kappa.size() + 1;
  if (kappa.empty()) throw InputError("need at least one curvature");
  if (!(eta > 0.0)) throw InputError("eta must be positive");
  if (j < 2 || j > n) throw ConfigError("barrier needs kappa_{N-j+1} within [1, N-1], i.e. 2 <= j <= N");
}

}  // namespace

double barrier_eval(std::span<const double> kappa, std::size_t j, double eta, std::span<const double> x) {
  check_barrier_args(kappa, j, eta);
  const std::size_t n = kappa.size() + 1;
  if (x.size() != n) throw InputError("point has wrong dimension");
  double u = x[n - 1];
  for (std::size_t i = 0; i + 1 < n; ++i) u -= 0.5 * (kappa[i] - eta) * x[i] * x[i];
  const double b = kappa[n - j] - eta;
  return u - 0.5 * b * x[n - 1] * x[n - 1];
}

SymMatrix barrier_hessian(std::span<const double> kappa, std::size_t j, double eta) {
  check_barrier_args(kappa, j, eta);
  const std::size_t n = kappa.size() + 1;
  Vec d(n);
  for (std::size_t i = 0; i + 1 < n; ++i) d[i] = -(kappa[i] - eta);
  d[n - 1] = -(kappa[n - j] - eta);
  return SymMatrix::diagonal(d);
}

Vec boundary_point_towards(const ImplicitDomain& domain, std::span<const double> direction) {
  const Vec dir = scaled(direction, 1.0 / norm(direction));
  const Vec& w = domain.witness();
  const double reach = 2.0 * domain.diameter();
  constexpr int samples = 512;
  Vec prev = w;
  for (int s = 1; s <= samples; ++s) {
    Vec p = axpy(reach * s / samples, dir, w);
    if (!domain.inside(p)) {
      const Vec hit = domain.bisect_crossing(prev, p, 1e-13 * domain.diameter());
      if (std::abs(domain.level(hit)) <= 1e-10) return hit;
      return domain.project_to_boundary(hit);
    }
    prev = std::move(p);
  }
  throw InputError("ray from the witness never leaves the domain");
}

}  // namespace hessgame
