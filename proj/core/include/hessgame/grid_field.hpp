#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hessgame/datum.hpp"
#include "hessgame/domain.hpp"
#include "hessgame/linalg.hpp"

namespace hessgame {

/// Scalar field on a regular lattice covering a box, with multilinear
/// interpolation. Nodes are classified interior (phi < 0) or exterior;
/// nodes exactly on the boundary count as exterior.
class GridField {
 public:
  /// Lattice starting at box.lo with spacing h on every axis; the upper
  /// corner is pushed out to the first lattice point at or beyond box.hi.
  GridField(const Box& box, double h);

  /// Lattice over the domain's bounding box; exterior nodes hold g, interior
  /// nodes hold `interior_value`.
  static GridField on_domain(const ImplicitDomain& domain, double h, const BoundaryDatum& g,
                             double interior_value);

  std::size_t dim() const { return counts_.size(); }
  std::size_t size() const { return values_.size(); }
  const Box& box() const { return box_; }
  const std::vector<std::size_t>& counts() const { return counts_; }
  const std::vector<std::size_t>& strides() const { return strides_; }
  const Vec& spacing() const { return spacing_; }
  double max_spacing() const;

  double value(std::size_t i) const { return values_[i]; }
  void set_value(std::size_t i, double v) { values_[i] = v; }
  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  bool is_interior(std::size_t i) const { return interior_[i] != 0; }
  void set_interior(std::size_t i, bool inside) { interior_[i] = inside ? 1 : 0; }
  const std::vector<std::size_t>& interior_nodes() const { return interior_list_; }
  void classify(const ImplicitDomain& domain);
  bool same_lattice(const GridField& other) const;

  Vec node_point(std::size_t i) const;
  std::vector<std::size_t> multi_index(std::size_t i) const;

  /// Multilinear interpolation; exact at nodes and for affine node data.
  /// Throws InputError outside the box.
  double eval(std::span<const double> x) const;

  /// The 2^N corner indices and weights used by eval(x).
  void interpolation_stencil(std::span<const double> x, std::vector<std::size_t>& nodes,
                             std::vector<double>& weights) const;

 private:
  Box box_;
  Vec spacing_;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> strides_;
  std::vector<double> values_;
  std::vector<std::uint8_t> interior_;
  std::vector<std::size_t> interior_list_;
};

}  // namespace hessgame
