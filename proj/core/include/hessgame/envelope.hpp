#pragma once

// Convex and concave envelopes of sampled boundary data, computed per query
// by a small LP, and the affine-slice membership test for solved fields.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hessgame/datum.hpp"
#include "hessgame/domain.hpp"
#include "hessgame/game.hpp"
#include "hessgame/grid_field.hpp"
#include "hessgame/sampling.hpp"
#include "hessgame/simplex.hpp"

namespace hessgame {

/// Points with attached values; the envelopes are taken over their convex hull.
struct LiftedCloud {
  std::size_t dim = 0;
  std::vector<Vec> points;
  std::vector<double> values;

  void add(Vec p, double v);
  LiftedCloud negated() const;
};

/// `count` boundary points of a star-shaped domain (rays from the witness,
/// equally spaced angles in 2-d, seeded directions otherwise) carrying g.
LiftedCloud boundary_cloud(const ImplicitDomain& domain, const BoundaryDatum& g, std::size_t count,
                           std::uint64_t seed = 1);

struct EnvelopeValue {
  LpStatus status = LpStatus::infeasible;  // infeasible: query outside the hull
  double value = 0.0;
  bool ok() const { return status == LpStatus::optimal; }
};

/// min sum l_i v_i  s.t.  sum l_i p_i = x, sum l_i = 1, l >= 0.
EnvelopeValue convex_envelope_eval(const LiftedCloud& cloud, std::span<const double> x);
/// -convex_envelope_eval(cloud.negated(), x).
EnvelopeValue concave_envelope_eval(const LiftedCloud& cloud, std::span<const double> x);

/// Affine j-dimensional slice base + span(frame) of the domain.
struct AffineSlice {
  Vec base;
  SubspaceFrame frame;

  Vec to_ambient(std::span<const double> coords) const;
};

struct MembershipOptions {
  std::size_t n_slices = 64;
  std::size_t rays = 64;
  std::uint64_t seed = 1;
  double solver_tol = 1e-8;
  double eps = 0.0;  // DPP step; scales the boundary-layer allowance
};

struct MembershipReport {
  std::size_t slices_checked = 0;
  std::size_t slices_skipped = 0;
  double worst_violation = 0.0;  // max over slices of field(base) - envelope(base)
  Vec worst_base;
  // Tolerance composition.
  double solver_tol = 0.0;
  double interp_slack = 0.0;
  double boundary_slack = 0.0;  // eps * Lipschitz bound of g
  double cloud_bias = 0.0;      // Lipschitz bound * half the widest cloud gap
  double tolerance() const { return 2.0 * solver_tol + interp_slack + boundary_slack + cloud_bias; }
  bool passed() const { return worst_violation <= tolerance(); }
};

/// For seeded slices through random interior points: locate the slice
/// boundary by ray marching and bisection, take the concave envelope of the
/// field's boundary trace at the base point, and record field - envelope.
MembershipReport hj_membership_check(const GridField& field, const ImplicitDomain& domain,
                                     const BoundaryDatum& g, std::size_t j, const MembershipOptions& options);

/// sup over interior nodes of |a + b|; throws InputError on mismatched lattices.
double duality_gap(const GridField& a, const GridField& b);
bool duality_check_smallest(const GridField& field_g, const GridField& field_neg, double tolerance);

}  // namespace hessgame
