#include "hessgame/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hessgame/errors.hpp"
#include "hessgame/simplex.hpp"

namespace hessgame {

double Box::diameter() const { return distance(lo, hi); }

bool Box::contains(std::span<const double> x, double slack) const {
  for (std::size_t k = 0; k < lo.size(); ++k)
    if (x[k] < lo[k] - slack || x[k] > hi[k] + slack) return false;
  return true;
}

Box Box::inflated(double by) const {
  Box b = *this;
  for (double& x : b.lo) x -= by;
  for (double& x : b.hi) x += by;
  return b;
}

namespace {

// Interior samples on a lattice with at most ~4096 points, used as bisection
// anchors for the distance estimate.
std::vector<Vec> lattice_interior_samples(const ImplicitDomain& d) {
  const std::size_t n = d.dim();
  const auto per_axis = static_cast<std::size_t>(
      std::max(3.0, std::floor(std::pow(4096.0, 1.0 / static_cast<double>(n)))));
  std::vector<Vec> out;
  std::vector<std::size_t> idx(n, 0);
  const Box& b = d.bounding_box();
  for (;;) {
    Vec x(n);
    for (std::size_t k = 0; k < n; ++k)
      x[k] = b.lo[k] + (b.hi[k] - b.lo[k]) * (static_cast<double>(idx[k]) + 0.5) /
                           static_cast<double>(per_axis);
    if (d.inside(x)) out.push_back(std::move(x));
    std::size_t k = 0;
    while (k < n && ++idx[k] == per_axis) idx[k++] = 0;
    if (k == n) break;
  }
  out.push_back(d.witness());
  return out;
}

}  // namespace

ImplicitDomain::ImplicitDomain(std::string name, std::size_t dim, LevelFunction level, Box box,
                               Vec witness)
    : name_(std::move(name)), dim_(dim), level_(std::move(level)), box_(std::move(box)),
      witness_(std::move(witness)) {
  if (dim_ < 1 || box_.lo.size() != dim_ || box_.hi.size() != dim_ || witness_.size() != dim_)
    throw InputError("domain '" + name_ + "': inconsistent dimensions");
  for (std::size_t k = 0; k < dim_; ++k)
    if (!(box_.lo[k] < box_.hi[k])) throw InputError("domain '" + name_ + "': empty bounding box");
  if (!inside(witness_)) throw InputError("domain '" + name_ + "': witness point is not inside");
  samples_ = lattice_interior_samples(*this);
}

ImplicitDomain ImplicitDomain::ball(Vec center, double radius) {
  if (!(radius > 0.0)) throw InputError("ball radius must be positive");
  const std::size_t n = center.size();
  Box box{center, center};
  for (std::size_t k = 0; k < n; ++k) {
    box.lo[k] -= radius;
    box.hi[k] += radius;
  }
  auto level = [center, radius](std::span<const double> x) { return distance(x, center) - radius; };
  return ImplicitDomain("ball", n, level, box, center);
}

ImplicitDomain ImplicitDomain::half_ball(std::size_t dim, double radius, std::size_t cut_axis) {
  if (!(radius > 0.0)) throw InputError("half_ball radius must be positive");
  if (cut_axis < 1 || cut_axis > dim) throw InputError("half_ball cut axis out of range");
  const std::size_t a = cut_axis - 1;
  Box box{Vec(dim, -radius), Vec(dim, radius)};
  box.lo[a] = 0.0;
  auto level = [radius, a](std::span<const double> x) {
    return std::max(norm(x) - radius, -x[a]);
  };
  Vec witness(dim, 0.0);
  witness[a] = 0.5 * radius;
  return ImplicitDomain("half_ball", dim, level, box, witness);
}

ImplicitDomain ImplicitDomain::union_of_balls(std::vector<BallSpec> balls) {
  if (balls.empty()) throw InputError("union_of_balls needs at least one ball");
  const std::size_t n = balls.front().center.size();
  Box box{Vec(n, std::numeric_limits<double>::infinity()), Vec(n, -std::numeric_limits<double>::infinity())};
  for (const BallSpec& b : balls) {
    if (b.center.size() != n || !(b.radius > 0.0)) throw InputError("union_of_balls: bad ball");
    for (std::size_t k = 0; k < n; ++k) {
      box.lo[k] = std::min(box.lo[k], b.center[k] - b.radius);
      box.hi[k] = std::max(box.hi[k], b.center[k] + b.radius);
    }
  }
  Vec witness = balls.front().center;
  auto level = [balls = std::move(balls)](std::span<const double> x) {
    double v = std::numeric_limits<double>::infinity();
    for (const BallSpec& b : balls) v = std::min(v, distance(x, b.center) - b.radius);
    return v;
  };
  return ImplicitDomain("union_of_balls", n, level, box, witness);
}

ImplicitDomain ImplicitDomain::ellipsoid(Vec center, Vec semi_axes) {
  const std::size_t n = center.size();
  if (semi_axes.size() != n) throw InputError("ellipsoid: semi-axes dimension mismatch");
  for (double s : semi_axes)
    if (!(s > 0.0)) throw InputError("ellipsoid semi-axes must be positive");
  Box box{center, center};
  for (std::size_t k = 0; k < n; ++k) {
    box.lo[k] -= semi_axes[k];
    box.hi[k] += semi_axes[k];
  }
  auto level = [center, semi_axes](std::span<const double> x) {
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double t = (x[k] - center[k]) / semi_axes[k];
      s += t * t;
    }
    return std::sqrt(s) - 1.0;
  };
  return ImplicitDomain("ellipsoid", n, level, box, center);
}

ImplicitDomain ImplicitDomain::polytope(std::size_t dim, std::vector<HalfSpace> faces) {
  if (faces.size() < dim + 1) throw InputError("polytope needs at least N+1 faces");
  for (HalfSpace& f : faces) {
    if (f.normal.size() != dim) throw InputError("polytope face has wrong dimension");
    const double len = norm(f.normal);
    if (!(len > 0.0)) throw InputError("polytope face normal is zero");
    for (double& x : f.normal) x /= len;
    f.offset /= len;
  }
  // Free variables split as x = p - q; each face gets a slack; one extra
  // variable s >= 0 measures the inscribed-ball radius (Chebyshev center).
  const std::size_t m = faces.size();
  const std::size_t nv = 2 * dim + m + 1;
  std::vector<Vec> a(m, Vec(nv, 0.0));
  Vec b(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k < dim; ++k) {
      a[r][k] = faces[r].normal[k];
      a[r][dim + k] = -faces[r].normal[k];
    }
    a[r][2 * dim + r] = 1.0;
    a[r][nv - 1] = 1.0;
    b[r] = faces[r].offset;
  }
  const auto extract = [&](const Vec& x) {
    Vec p(dim);
    for (std::size_t k = 0; k < dim; ++k) p[k] = x[k] - x[dim + k];
    return p;
  };
  Box box{Vec(dim), Vec(dim)};
  for (std::size_t k = 0; k < dim; ++k)
    for (double sign : {1.0, -1.0}) {
      Vec c(nv, 0.0);
      c[k] = sign;
      c[dim + k] = -sign;
      const LpResult res = solve_standard_lp(a, b, c);
      if (res.status != LpStatus::optimal) throw InputError("polytope is empty or unbounded");
      (sign > 0 ? box.lo[k] : box.hi[k]) = extract(res.x)[k];
    }
  Vec c(nv, 0.0);
  c[nv - 1] = -1.0;
  const LpResult center = solve_standard_lp(a, b, c);
  if (center.status != LpStatus::optimal || center.x[nv - 1] <= 0.0)
    throw InputError("polytope has empty interior");
  auto level = [faces = std::move(faces)](std::span<const double> x) {
    double v = -std::numeric_limits<double>::infinity();
    for (const HalfSpace& f : faces) v = std::max(v, dot(f.normal, x) - f.offset);
    return v;
  };
  return ImplicitDomain("polytope", dim, level, box, extract(center.x));
}

ImplicitDomain ImplicitDomain::box(Vec lo, Vec hi) {
  const std::size_t n = lo.size();
  if (hi.size() != n) throw InputError("box: bounds dimension mismatch");
  std::vector<HalfSpace> faces;
  for (std::size_t k = 0; k < n; ++k) {
    if (!(lo[k] < hi[k])) throw InputError("box: empty extent");
    faces.push_back({unit_axis(n, k), hi[k]});
    faces.push_back({scaled(unit_axis(n, k), -1.0), -lo[k]});
  }
  ImplicitDomain d = polytope(n, std::move(faces));
  d.name_ = "box";
  return d;
}

Vec ImplicitDomain::level_gradient(std::span<const double> x) const {
  const double step = 1e-6 * std::max(diameter(), 1e-12);
  Vec g(dim_);
  Vec p(x.begin(), x.end());
  for (std::size_t k = 0; k < dim_; ++k) {
    const double xk = p[k];
    p[k] = xk + step;
    const double fp = level_(p);
    p[k] = xk - step;
    const double fm = level_(p);
    p[k] = xk;
    g[k] = (fp - fm) / (2.0 * step);
  }
  return g;
}

bool ImplicitDomain::inside(std::span<const double> x) const {
  if (!box_.contains(x)) return false;
  return level_(x) < 0.0;
}

Vec ImplicitDomain::bisect_crossing(std::span<const double> inside_pt,
                                    std::span<const double> outside_pt, double tolerance) const {
  Vec a(inside_pt.begin(), inside_pt.end());
  Vec b(outside_pt.begin(), outside_pt.end());
  while (distance(a, b) > tolerance) {
    Vec mid(dim_);
    for (std::size_t k = 0; k < dim_; ++k) mid[k] = 0.5 * (a[k] + b[k]);
    if (inside(mid))
      a = std::move(mid);
    else
      b = std::move(mid);
  }
  return b;
}

double ImplicitDomain::exterior_distance(std::span<const double> x, double tolerance) const {
  if (inside(x)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const auto try_anchor = [&](const Vec& p) {
    const Vec cross = bisect_crossing(p, x, tolerance);
    best = std::min(best, distance(cross, x));
  };

  // The few nearest lattice samples.
  std::vector<std::pair<double, std::size_t>> near;
  for (std::size_t i = 0; i < samples_.size(); ++i) near.emplace_back(distance(samples_[i], x), i);
  const std::size_t keep = std::min<std::size_t>(8, near.size());
  std::partial_sort(near.begin(), near.begin() + static_cast<std::ptrdiff_t>(keep), near.end());
  for (std::size_t i = 0; i < keep; ++i) try_anchor(samples_[near[i].second]);

  // Descend along -grad(phi) until inside, then bisect back.
  Vec g = level_gradient(x);
  const double gl = norm(g);
  if (gl > 1e-12) {
    for (double& v : g) v /= gl;
    double t = std::max(tolerance, std::abs(level_(x)) / gl);
    for (int it = 0; it < 60 && t < 2.0 * diameter(); ++it, t *= 1.5) {
      Vec p = axpy(-t, g, x);
      if (inside(p)) {
        try_anchor(p);
        break;
      }
    }
  }
  return best;
}

bool ImplicitDomain::in_strip(std::span<const double> x, double eps) const {
  if (!(eps > 0.0)) throw InputError("strip width must be positive");
  if (inside(x)) return false;
  return exterior_distance(x, eps / 100.0) <= eps;
}

Vec ImplicitDomain::project_to_boundary(std::span<const double> x, double tol) const {
  Vec p(x.begin(), x.end());
  for (int it = 0; it < 100; ++it) {
    const double f = level_(p);
    if (std::abs(f) <= tol) return p;
    const Vec g = level_gradient(p);
    const double g2 = dot(g, g);
    if (g2 < 1e-24) throw SingularPointError("vanishing level gradient during boundary projection");
    for (std::size_t k = 0; k < dim_; ++k) p[k] -= f * g[k] / g2;
  }
  if (std::abs(level_(p)) > tol)
    throw InvariantError("boundary projection did not converge");
  return p;
}

}  // namespace hessgame
