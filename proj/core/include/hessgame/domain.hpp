#pragma once

// Bounded domains given by a level function (inside iff phi < 0), the
// exterior boundary strip, and Newton projection onto the boundary.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hessgame/linalg.hpp"

namespace hessgame {

struct Box {
  Vec lo;
  Vec hi;

  std::size_t dim() const { return lo.size(); }
  double diameter() const;
  bool contains(std::span<const double> x, double slack = 0.0) const;
  Box inflated(double by) const;
};

using LevelFunction = std::function<double(std::span<const double>)>;

struct BallSpec {
  Vec center;
  double radius = 1.0;
};

struct HalfSpace {
  Vec normal;  // need not be unit; normalised on construction
  double offset = 0.0;  // region is <normal, x> < offset
};

class ImplicitDomain {
 public:
  ImplicitDomain(std::string name, std::size_t dim, LevelFunction level, Box box, Vec witness);

  static ImplicitDomain ball(Vec center, double radius);
  /// B_radius(0) intersected with {x_axis > 0}; `cut_axis` is 1-based (2 means x_2).
  static ImplicitDomain half_ball(std::size_t dim, double radius, std::size_t cut_axis);
  static ImplicitDomain union_of_balls(std::vector<BallSpec> balls);
  static ImplicitDomain ellipsoid(Vec center, Vec semi_axes);
  /// Bounded intersection of half-spaces, phi = max_i (<n_i,x> - b_i) with unit n_i.
  static ImplicitDomain polytope(std::size_t dim, std::vector<HalfSpace> faces);
  /// Axis-aligned open box (lo, hi) as a polytope.
  static ImplicitDomain box(Vec lo, Vec hi);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const Box& bounding_box() const { return box_; }
  const Vec& witness() const { return witness_; }
  double diameter() const { return box_.diameter(); }

  double level(std::span<const double> x) const { return level_(x); }
  /// Central-difference gradient of the level function (step 1e-6 * diam).
  Vec level_gradient(std::span<const double> x) const;

  /// Membership; false outside the bounding box.
  bool inside(std::span<const double> x) const;

  /// Upper estimate of dist(x, boundary) for x outside the domain: bisection
  /// toward the nearest stored interior samples and along -grad phi.
  double exterior_distance(std::span<const double> x, double tolerance) const;

  /// x outside the domain and within distance eps of the boundary (closed strip).
  bool in_strip(std::span<const double> x, double eps) const;

  /// Newton steps x <- x - phi grad(phi) / |grad(phi)|^2 until |phi| <= tol.
  Vec project_to_boundary(std::span<const double> x, double tol = 1e-10) const;

  /// A point on the segment [a, b] where phi changes sign (phi(a) < 0 <= phi(b)),
  /// bisected to length `tolerance`. Returns the outside end of the final bracket.
  Vec bisect_crossing(std::span<const double> inside_pt, std::span<const double> outside_pt,
                      double tolerance) const;

  const std::vector<Vec>& interior_samples() const { return samples_; }

 private:
  std::string name_;
  std::size_t dim_;
  LevelFunction level_;
  Box box_;
  Vec witness_;
  std::vector<Vec> samples_;
};

}  // namespace hessgame
