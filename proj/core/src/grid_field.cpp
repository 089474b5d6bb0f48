#include "hessgame/grid_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hessgame/errors.hpp"

namespace hessgame {

GridField::GridField(const Box& box, double h) : box_(box) {
  const std::size_t n = box.dim();
  if (!(h > 0.0)) throw ConfigError("grid spacing h must be positive");
  spacing_.assign(n, h);
  counts_.resize(n);
  strides_.resize(n);
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const double cells = std::ceil((box.hi[k] - box.lo[k]) / h - 1e-9);
    counts_[k] = static_cast<std::size_t>(std::max(1.0, cells)) + 1;
    box_.hi[k] = box.lo[k] + static_cast<double>(counts_[k] - 1) * h;
    strides_[k] = total;
    total *= counts_[k];
  }
  if (total > 200'000'000) throw ConfigError("grid too large (" + std::to_string(total) + " nodes)");
  values_.assign(total, 0.0);
  interior_.assign(total, 0);
}

GridField GridField::on_domain(const ImplicitDomain& domain, double h, const BoundaryDatum& g,
                               double interior_value) {
  GridField f(domain.bounding_box(), h);
  f.classify(domain);
  for (std::size_t i = 0; i < f.size(); ++i)
    f.values_[i] = f.is_interior(i) ? interior_value : g(f.node_point(i));
  return f;
}

double GridField::max_spacing() const { return *std::max_element(spacing_.begin(), spacing_.end()); }

void GridField::classify(const ImplicitDomain& domain) {
  if (domain.dim() != dim()) throw InputError("domain and grid dimensions differ");
  interior_list_.clear();
  for (std::size_t i = 0; i < size(); ++i) {
    const bool in = domain.level(node_point(i)) < 0.0;
    interior_[i] = in ? 1 : 0;
    if (in) interior_list_.push_back(i);
  }
}

bool GridField::same_lattice(const GridField& other) const {
  return counts_ == other.counts_ && box_.lo == other.box_.lo && spacing_ == other.spacing_;
}

Vec GridField::node_point(std::size_t i) const {
  Vec x(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    const std::size_t ik = (i / strides_[k]) % counts_[k];
    x[k] = box_.lo[k] + static_cast<double>(ik) * spacing_[k];
  }
  return x;
}

std::vector<std::size_t> GridField::multi_index(std::size_t i) const {
  std::vector<std::size_t> m(dim());
  for (std::size_t k = 0; k < dim(); ++k) m[k] = (i / strides_[k]) % counts_[k];
  return m;
}

void GridField::interpolation_stencil(std::span<const double> x, std::vector<std::size_t>& nodes,
                                      std::vector<double>& weights) const {
  const std::size_t n = dim();
  if (x.size() != n) throw InputError("evaluation point has wrong dimension");
  if (!box_.contains(x, 1e-9 * max_spacing()))
    throw InputError("evaluation point lies outside the grid box");
  std::size_t base = 0;
  double frac[16];
  for (std::size_t k = 0; k < n; ++k) {
    const double t = (x[k] - box_.lo[k]) / spacing_[k];
    auto ik = static_cast<std::ptrdiff_t>(std::floor(t));
    ik = std::clamp<std::ptrdiff_t>(ik, 0, static_cast<std::ptrdiff_t>(counts_[k]) - 2);
    frac[k] = std::clamp(t - static_cast<double>(ik), 0.0, 1.0);
    base += static_cast<std::size_t>(ik) * strides_[k];
  }
  const std::size_t corners = std::size_t{1} << n;
  nodes.resize(corners);
  weights.resize(corners);
  for (std::size_t c = 0; c < corners; ++c) {
    std::size_t idx = base;
    double w = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (c & (std::size_t{1} << k)) {
        idx += strides_[k];
        w *= frac[k];
      } else {
        w *= 1.0 - frac[k];
      }
    }
    nodes[c] = idx;
    weights[c] = w;
  }
}

double GridField::eval(std::span<const double> x) const {
  thread_local std::vector<std::size_t> nodes;
  thread_local std::vector<double> weights;
  interpolation_stencil(x, nodes, weights);
  double s = 0.0;
  for (std::size_t c = 0; c < nodes.size(); ++c) s += weights[c] * values_[nodes[c]];
  return s;
}

}  // namespace hessgame
