#include "hessgame/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hessgame/errors.hpp"

namespace hessgame {

std::string to_string(Orientation o) { return o == Orientation::min_max ? "min_max" : "max_min"; }

Orientation orientation_from_string(const std::string& s) {
  if (s == "min_max") return Orientation::min_max;
  if (s == "max_min") return Orientation::max_min;
  throw ConfigError("unknown orientation '" + s + "' (expected min_max or max_min)");
}

SubspaceFrame::SubspaceFrame(std::size_t ambient_dim, std::vector<Vec> basis)
    : n_(ambient_dim), basis_(std::move(basis)) {
  if (basis_.empty() || basis_.size() > n_)
    throw InputError("subspace frame dimension must lie in [1, N]");
  for (const Vec& b : basis_)
    if (b.size() != n_) throw InputError("frame vector has wrong ambient dimension");
  for (std::size_t a = 0; a < basis_.size(); ++a)
    for (std::size_t b = a; b < basis_.size(); ++b) {
      const double g = dot(basis_[a], basis_[b]);
      if (std::abs(g - (a == b ? 1.0 : 0.0)) > 1e-12)
        throw InputError("frame basis is not orthonormal");
    }
}

SubspaceFrame SubspaceFrame::orthonormalize(std::size_t ambient_dim, std::vector<Vec> vectors) {
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    Vec& v = vectors[k];
    const double scale = norm(v);
    if (!(scale > 0.0)) throw InputError("cannot orthonormalize a zero vector");
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t i = 0; i < k; ++i) {
        const double c = dot(v, vectors[i]);
        for (std::size_t t = 0; t < v.size(); ++t) v[t] -= c * vectors[i][t];
      }
    const double len = norm(v);
    if (len < 1e-10 * scale) throw InputError("frame vectors are linearly dependent");
    for (double& x : v) x /= len;
  }
  return SubspaceFrame(ambient_dim, std::move(vectors));
}

Vec SubspaceFrame::embed(std::span<const double> coeffs) const {
  Vec out(n_, 0.0);
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (std::size_t t = 0; t < n_; ++t) out[t] += coeffs[k] * basis_[k][t];
  return out;
}

Vec SubspaceFrame::coordinates(std::span<const double> x) const {
  Vec c(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = dot(basis_[k], x);
  return c;
}

double SubspaceFrame::distance_to(std::span<const double> x) const {
  const Vec p = embed(coordinates(x));
  return distance(p, x);
}

std::vector<SubspaceFrame> coordinate_frames(std::size_t n, std::size_t j) {
  if (j < 1 || j > n) throw InputError("subspace dimension out of range");
  std::vector<SubspaceFrame> frames;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(j), true);
  // prev_permutation on a true-first mask walks combinations lexicographically.
  do {
    std::vector<Vec> basis;
    for (std::size_t k = 0; k < n; ++k)
      if (pick[k]) basis.push_back(unit_axis(n, k));
    frames.emplace_back(n, std::move(basis));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return frames;
}

Vec random_unit_vector(std::size_t n, Rng& rng) {
  for (;;) {
    Vec v(n);
    for (double& x : v) x = gaussian(rng);
    const double len = norm(v);
    if (len > 1e-8) {
      for (double& x : v) x /= len;
      return v;
    }
  }
}

SubspaceFrame random_frame(std::size_t n, std::size_t j, Rng& rng) {
  if (j < 1 || j > n) throw InputError("subspace dimension out of range");
  for (;;) {
    std::vector<Vec> cols(j, Vec(n));
    for (Vec& c : cols)
      for (double& x : c) x = gaussian(rng);
    try {
      return SubspaceFrame::orthonormalize(n, std::move(cols));
    } catch (const InputError&) {
      // rank-deficient draw; resample
    }
  }
}

namespace {

void push_unique(std::vector<Vec>& out, Vec v) {
  for (const Vec& w : out)
    if (std::abs(std::abs(dot(v, w)) - 1.0) < 1e-14) return;
  out.push_back(std::move(v));
}

}  // namespace

std::vector<Vec> sphere_coefficients(std::size_t j, std::size_t count, Rng& rng) {
  std::vector<Vec> out;
  for (std::size_t k = 0; k < j; ++k) out.push_back(unit_axis(j, k));
  if (j == 1) return out;
  if (j == 2) {
    for (std::size_t k = 0; k < count; ++k) {
      const double a = std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
      push_unique(out, Vec{std::cos(a), std::sin(a)});
    }
  } else if (j == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 0; k < count; ++k) {
      const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(count);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double a = golden * static_cast<double>(k);
      push_unique(out, Vec{r * std::cos(a), r * std::sin(a), z});
    }
  } else {
    for (std::size_t k = 0; k < count; ++k) push_unique(out, random_unit_vector(j, rng));
  }
  return out;
}

std::vector<Vec> frame_directions(const SubspaceFrame& frame, std::size_t count, Rng& rng) {
  std::vector<Vec> out;
  for (const Vec& c : sphere_coefficients(frame.dim(), count, rng)) out.push_back(frame.embed(c));
  return out;
}

double refine_on_frame(const SubspaceFrame& frame, Vec& start, double initial_step, bool maximize,
                       const std::function<double(std::span<const double>)>& f) {
  const std::size_t j = frame.dim();
  double best = f(frame.embed(start));
  if (j == 1) return best;
  const auto better = [maximize](double a, double b) { return maximize ? a > b : a < b; };
  double step = initial_step;
  for (int iter = 0; iter < 4000 && step > 1e-10; ++iter) {
    bool improved = false;
    for (std::size_t k = 0; k < j && !improved; ++k)
      for (double sign : {1.0, -1.0}) {
        Vec c = start;
        c[k] += sign * step;
        const double len = norm(c);
        for (double& x : c) x /= len;
        const double val = f(frame.embed(c));
        if (better(val, best)) {
          best = val;
          start = std::move(c);
          improved = true;
          break;
        }
      }
    if (!improved) step *= 0.5;
  }
  return best;
}

FrameSearchResult frame_search(const std::vector<SubspaceFrame>& frames, std::size_t directions,
                               Orientation orientation, bool refine, std::uint64_t seed,
                               const std::function<double(std::span<const double>)>& f) {
  if (frames.empty()) throw InputError("frame_search needs at least one frame");
  const bool inner_max = orientation == Orientation::min_max;
  FrameSearchResult result;
  result.value = inner_max ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
  for (std::size_t fi = 0; fi < frames.size(); ++fi) {
    const SubspaceFrame& frame = frames[fi];
    Rng rng(sub_seed(seed, fi));
    const std::vector<Vec> coeffs = sphere_coefficients(frame.dim(), directions, rng);
    double inner = inner_max ? -std::numeric_limits<double>::infinity()
                             : std::numeric_limits<double>::infinity();
    Vec best_c;
    for (const Vec& c : coeffs) {
      const double val = f(frame.embed(c));
      if (inner_max ? val > inner : val < inner) {
        inner = val;
        best_c = c;
      }
    }
    if (refine) {
      const double step = std::numbers::pi / (2.0 * static_cast<double>(std::max<std::size_t>(directions, 1)));
      inner = refine_on_frame(frame, best_c, step, inner_max, f);
    }
    if (inner_max ? inner < result.value : inner > result.value) {
      result.value = inner;
      result.frame_index = fi;
      result.direction = frame.embed(best_c);
    }
  }
  return result;
}

}  // namespace hessgame
