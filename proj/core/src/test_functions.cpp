#include "hessgame/test_functions.hpp"

#include <cmath>
#include <numbers>

#include "hessgame/errors.hpp"

namespace hessgame {

namespace {

double profile(Ridge r, double t) {
  switch (r) {
    case Ridge::sin: return std::sin(t);
    case Ridge::cos: return std::cos(t);
    case Ridge::exp: return std::exp(t);
    case Ridge::cosh: return std::cosh(t);
    case Ridge::quartic: return t * t * t * t;
  }
  return 0.0;
}

double profile_d1(Ridge r, double t) {
  switch (r) {
    case Ridge::sin: return std::cos(t);
    case Ridge::cos: return -std::sin(t);
    case Ridge::exp: return std::exp(t);
    case Ridge::cosh: return std::sinh(t);
    case Ridge::quartic: return 4.0 * t * t * t;
  }
  return 0.0;
}

double profile_d2(Ridge r, double t) {
  switch (r) {
    case Ridge::sin: return -std::sin(t);
    case Ridge::cos: return -std::cos(t);
    case Ridge::exp: return std::exp(t);
    case Ridge::cosh: return std::cosh(t);
    case Ridge::quartic: return 12.0 * t * t;
  }
  return 0.0;
}

// f(t + d) + f(t - d) - 2 f(t)
double profile_sd(Ridge r, double t, double d) {
  const double s = std::sin(0.5 * d);
  const double sh = std::sinh(0.5 * d);
  switch (r) {
    case Ridge::sin: return -4.0 * std::sin(t) * s * s;
    case Ridge::cos: return -4.0 * std::cos(t) * s * s;
    case Ridge::exp: return 4.0 * std::exp(t) * sh * sh;
    case Ridge::cosh: return 4.0 * std::cosh(t) * sh * sh;
    case Ridge::quartic: return 12.0 * t * t * d * d + 2.0 * d * d * d * d;
  }
  return 0.0;
}

}  // namespace

SmoothTestFunction::SmoothTestFunction(std::string name, SymMatrix a, Vec b, double c,
                                       std::vector<RidgeTerm> ridges)
    : name_(std::move(name)), a_(std::move(a)), b_(std::move(b)), c_(c), ridges_(std::move(ridges)) {
  if (b_.size() != a_.dim()) throw InputError("linear part has wrong dimension");
  for (const RidgeTerm& r : ridges_)
    if (r.w.size() != a_.dim()) throw InputError("ridge direction has wrong dimension");
}

double SmoothTestFunction::value(std::span<const double> x) const {
  double v = 0.5 * a_.quadratic_form(x) + dot(b_, x) + c_;
  for (const RidgeTerm& r : ridges_) v += r.coef * profile(r.profile, dot(r.w, x));
  return v;
}

Vec SmoothTestFunction::gradient(std::span<const double> x) const {
  Vec g = axpy(1.0, a_.apply(x), b_);
  for (const RidgeTerm& r : ridges_) g = axpy(r.coef * profile_d1(r.profile, dot(r.w, x)), r.w, g);
  return g;
}

SymMatrix SmoothTestFunction::hessian(std::span<const double> x) const {
  SymMatrix h = a_;
  for (const RidgeTerm& r : ridges_) {
    const double s = r.coef * profile_d2(r.profile, dot(r.w, x));
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t k = i; k < dim(); ++k) h.set(i, k, h(i, k) + s * r.w[i] * r.w[k]);
  }
  return h;
}

double SmoothTestFunction::second_difference(std::span<const double> x, std::span<const double> d) const {
  double v = a_.quadratic_form(d);
  for (const RidgeTerm& r : ridges_) v += r.coef * profile_sd(r.profile, dot(r.w, x), dot(r.w, d));
  return v;
}

SymMatrix fd_hessian(const SmoothTestFunction& f, std::span<const double> x, double step) {
  const std::size_t n = f.dim();
  SymMatrix h(n);
  Vec d(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(d.begin(), d.end(), 0.0);
    d[a] = step;
    h.set(a, a, f.second_difference(x, d) / (step * step));
    for (std::size_t b = a + 1; b < n; ++b) {
      d[b] = step;
      const double plus = f.second_difference(x, d);
      d[b] = -step;
      const double minus = f.second_difference(x, d);
      d[b] = 0.0;
      h.set(a, b, (plus - minus) / (4.0 * step * step));
    }
  }
  return h;
}

std::vector<CatalogEntry> test_function_catalog() {
  using R = Ridge;
  const auto mat = [](std::vector<Vec> rows) { return SymMatrix::from_rows(rows); };
  const auto zeros = [](std::size_t n) { return Vec(n, 0.0); };
  const double pi = std::numbers::pi;
  std::vector<CatalogEntry> c;
  // Quadratics.
  c.push_back({{"saddle2", mat({{2, 0}, {0, -2}}), zeros(2), 0.0, {}}, {0.2, -0.1}});
  c.push_back({{"paraboloid_x2", mat({{2, 0}, {0, 0}}), {0.5, -1.0}, 1.0, {}}, {0.3, 0.4}});
  c.push_back({{"tilted2", mat({{1, 0.7}, {0.7, -0.4}}), {0.1, 0.2}, 0.0, {}}, {-0.5, 0.25}});
  c.push_back({{"quad3", mat({{3, 1, 0}, {1, -1, 0.5}, {0, 0.5, 2}}), {1, 0, -1}, 2.0, {}}, {0.1, 0.2, 0.3}});
  c.push_back({{"quad4", mat({{1, 0.2, 0, -0.3}, {0.2, -2, 0.4, 0}, {0, 0.4, 0.5, 0.1}, {-0.3, 0, 0.1, 3}}),
                zeros(4), 0.0, {}},
               {0.0, 0.1, -0.2, 0.3}});
  // Ridge composites.
  c.push_back({{"exp_x1", SymMatrix(2), zeros(2), 0.0, {{1.0, R::exp, {1, 0}}}}, {0.0, 0.0}});
  c.push_back({{"sin_sum", SymMatrix(2), zeros(2), 0.0, {{1.0, R::sin, {1, 0}}, {1.0, R::sin, {0, 1}}}},
               {pi / 2, pi / 2}});
  c.push_back({{"cos_diag", SymMatrix(2), zeros(2), 0.0, {{2.0, R::cos, {1, 1}}}}, {0.3, -0.2}});
  c.push_back({{"exp_mixed", mat({{0.5, 0}, {0, -0.5}}), zeros(2), 0.0, {{0.7, R::exp, {0.6, -0.8}}}},
               {0.4, 0.1}});
  c.push_back({{"cosh_saddle", mat({{0, 0}, {0, -1}}), {0.2, 0}, 0.0, {{1.0, R::cosh, {1, 0.5}}}}, {-0.3, 0.6}});
  c.push_back({{"quartic2", SymMatrix(2), zeros(2), 0.0, {{1.0, R::quartic, {1, -1}}, {0.5, R::sin, {0, 2}}}},
               {0.5, 0.1}});
  c.push_back({{"sin_cos2", SymMatrix(2), zeros(2), 0.0, {{1.0, R::sin, {2, 1}}, {-1.0, R::cos, {1, -2}}}},
               {0.2, 0.7}});
  c.push_back({{"exp3", SymMatrix(3), zeros(3), 0.0, {{1.0, R::exp, {1, 0, 0}}, {1.0, R::exp, {0, -1, 0}}}},
               {0.1, 0.2, 0.3}});
  c.push_back({{"sin3", mat({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}}), zeros(3), 0.0, {{1.5, R::sin, {1, 1, 1}}}},
               {0.2, -0.4, 0.5}});
  c.push_back({{"cos3", SymMatrix(3), {1, 1, 1}, 0.0,
                {{1.0, R::cos, {1, 0, 0}}, {0.5, R::cos, {0, 1, 0}}, {0.25, R::cos, {0, 0, 1}}}},
               {0.3, 1.1, -0.7}});
  c.push_back({{"cosh3", mat({{-1, 0, 0}, {0, 0.5, 0}, {0, 0, 0}}), zeros(3), 0.0, {{0.8, R::cosh, {0, 0.6, 0.8}}}},
               {0.5, -0.5, 0.2}});
  c.push_back({{"quartic3", SymMatrix(3), zeros(3), 0.0, {{1.0, R::quartic, {1, 2, -1}}, {-1.0, R::exp, {0, 1, 1}}}},
               {0.2, 0.1, -0.1}});
  c.push_back({{"exp4", SymMatrix(4), zeros(4), 0.0, {{1.0, R::exp, {0.5, 0.5, 0.5, 0.5}}, {-1.0, R::sin, {1, -1, 0, 0}}}},
               {0.1, 0.2, 0.3, 0.4}});
  c.push_back({{"mixed4", mat({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 0}}), zeros(4), 0.0,
                {{1.0, R::cos, {0, 0, 1, 1}}, {0.5, R::cosh, {1, 0, 0, -1}}}},
               {0.3, -0.2, 0.1, 0.6}});
  c.push_back({{"sin4", SymMatrix(4), zeros(4), 0.0,
                {{1.0, R::sin, {1, 0, 0, 0}}, {1.0, R::sin, {0, 1, 0, 0}}, {1.0, R::sin, {0, 0, 1, 0}}, {1.0, R::sin, {0, 0, 0, 1}}}},
               {0.4, 1.0, 2.0, -0.5}});
  return c;
}

}  // namespace hessgame
