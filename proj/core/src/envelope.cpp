#include "hessgame/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hessgame/errors.hpp"

namespace hessgame {

void LiftedCloud::add(Vec p, double v) {
  if (dim == 0) dim = p.size();
  if (p.size() != dim) throw InputError("cloud point has wrong dimension");
  points.push_back(std::move(p));
  values.push_back(v);
}

LiftedCloud LiftedCloud::negated() const {
  LiftedCloud out = *this;
  for (double& v : out.values) v = -v;
  return out;
}

namespace {

std::vector<Vec> ray_directions(std::size_t dim, std::size_t count, Rng& rng) {
  std::vector<Vec> dirs;
  if (dim == 1) return {Vec{1.0}, Vec{-1.0}};
  if (dim == 2) {
    for (std::size_t k = 0; k < count; ++k) {
      const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
      dirs.push_back({std::cos(a), std::sin(a)});
    }
    return dirs;
  }
  for (std::size_t k = 0; k < dim; ++k) {
    dirs.push_back(unit_axis(dim, k));
    dirs.push_back(scaled(unit_axis(dim, k), -1.0));
  }
  while (dirs.size() < count) dirs.push_back(random_unit_vector(dim, rng));
  return dirs;
}

// First boundary crossing along base + t*dir, t in (0, reach]; returns the
// outside end of the final bracket.
bool march(const ImplicitDomain& domain, std::span<const double> base, std::span<const double> dir,
           double reach, Vec& hit) {
  constexpr int samples = 256;
  Vec prev(base.begin(), base.end());
  for (int s = 1; s <= samples; ++s) {
    const Vec p = axpy(reach * s / samples, dir, base);
    if (!domain.inside(p)) {
      hit = domain.bisect_crossing(prev, p, 1e-10 * domain.diameter());
      return true;
    }
    prev = p;
  }
  return false;
}

double fd_gradient_norm(const BoundaryDatum& g, std::span<const double> x, double step) {
  Vec p(x.begin(), x.end());
  double s = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double keep = p[k];
    p[k] = keep + step;
    const double up = g(p);
    p[k] = keep - step;
    const double down = g(p);
    p[k] = keep;
    s += std::pow((up - down) / (2.0 * step), 2);
  }
  return std::sqrt(s);
}

}  // namespace

LiftedCloud boundary_cloud(const ImplicitDomain& domain, const BoundaryDatum& g, std::size_t count,
                           std::uint64_t seed) {
  Rng rng(seed);
  LiftedCloud cloud;
  cloud.dim = domain.dim();
  for (const Vec& d : ray_directions(domain.dim(), count, rng)) {
    Vec hit;
    if (!march(domain, domain.witness(), d, 2.0 * domain.diameter(), hit)) continue;
    cloud.add(domain.project_to_boundary(hit), 0.0);
    cloud.values.back() = g(cloud.points.back());
  }
  return cloud;
}

EnvelopeValue convex_envelope_eval(const LiftedCloud& cloud, std::span<const double> x) {
  if (cloud.points.empty()) throw InputError("empty cloud");
  if (x.size() != cloud.dim) throw InputError("query has wrong dimension");
  const std::size_t m = cloud.points.size();
  std::vector<Vec> a(cloud.dim + 1, Vec(m));
  Vec b(cloud.dim + 1);
  for (std::size_t k = 0; k < cloud.dim; ++k) {
    for (std::size_t i = 0; i < m; ++i) a[k][i] = cloud.points[i][k];
    b[k] = x[k];
  }
  std::fill(a[cloud.dim].begin(), a[cloud.dim].end(), 1.0);
  b[cloud.dim] = 1.0;
  const LpResult lp = solve_standard_lp(a, b, cloud.values);
  return {lp.status, lp.status == LpStatus::optimal ? lp.objective : 0.0};
}

EnvelopeValue concave_envelope_eval(const LiftedCloud& cloud, std::span<const double> x) {
  EnvelopeValue v = convex_envelope_eval(cloud.negated(), x);
  v.value = -v.value;
  return v;
}

Vec AffineSlice::to_ambient(std::span<const double> coords) const {
  return axpy(1.0, frame.embed(coords), base);
}

MembershipReport hj_membership_check(const GridField& field, const ImplicitDomain& domain,
                                     const BoundaryDatum& g, std::size_t j, const MembershipOptions& options) {
  const std::size_t n = domain.dim();
  if (j < 1 || j > n) throw ConfigError("slice dimension j must lie in [1, N]");
  if (options.n_slices < 1) throw ConfigError("need at least one slice");
  const FieldView u(field, domain, g);
  const double reach = 2.0 * domain.diameter();
  const double fd_step = 1e-6 * domain.diameter();

  MembershipReport rep;
  rep.solver_tol = options.solver_tol;
  rep.interp_slack = interpolation_slack(field);
  rep.worst_violation = -std::numeric_limits<double>::infinity();
  double lip = g.lipschitz().value_or(0.0);
  double widest_gap = 0.0;
  const auto& samples = domain.interior_samples();

  for (std::size_t s = 0; s < options.n_slices; ++s) {
    Rng rng(sub_seed(options.seed, s));
    const Vec& base = samples[static_cast<std::size_t>(uniform01(rng) * static_cast<double>(samples.size())) % samples.size()];
    const AffineSlice slice{base, random_frame(n, j, rng)};
    LiftedCloud cloud;
    cloud.dim = j;
    bool degenerate = false;
    for (const Vec& c : ray_directions(j, options.rays, rng)) {
      const Vec dir = slice.frame.embed(c);
      Vec hit;
      if (!march(domain, base, dir, reach, hit)) {
        degenerate = true;
        break;
      }
      const double t = distance(hit, base);
      if (!(t > 0.0)) {
        degenerate = true;
        break;
      }
      cloud.add(scaled(c, t), u(hit));
      if (!g.lipschitz()) lip = std::max(lip, fd_gradient_norm(g, hit, fd_step));
    }
    const Vec origin(j, 0.0);
    const EnvelopeValue env = degenerate ? EnvelopeValue{} : concave_envelope_eval(cloud, origin);
    if (!env.ok()) {
      ++rep.slices_skipped;
      continue;
    }
    ++rep.slices_checked;
    if (j >= 2) {
      for (std::size_t a = 0; a < cloud.points.size(); ++a) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t b = 0; b < cloud.points.size(); ++b)
          if (a != b) nearest = std::min(nearest, distance(cloud.points[a], cloud.points[b]));
        widest_gap = std::max(widest_gap, nearest);
      }
    }
    const double violation = u(base) - env.value;
    if (violation > rep.worst_violation) {
      rep.worst_violation = violation;
      rep.worst_base = base;
    }
  }
  if (rep.slices_checked == 0) rep.worst_violation = 0.0;
  rep.boundary_slack = options.eps * lip;
  rep.cloud_bias = 0.5 * widest_gap * lip;
  return rep;
}

double duality_gap(const GridField& a, const GridField& b) {
  if (!a.same_lattice(b)) throw InputError("duality check needs fields on the same lattice");
  double gap = 0.0;
  for (std::size_t i : a.interior_nodes()) {
    if (!b.is_interior(i)) throw InputError("fields classify nodes differently");
    gap = std::max(gap, std::abs(a.value(i) + b.value(i)));
  }
  return gap;
}

bool duality_check_smallest(const GridField& field_g, const GridField& field_neg, double tolerance) {
  return duality_gap(field_g, field_neg) <= tolerance;
}

}  // namespace hessgame
