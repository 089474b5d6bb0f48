#pragma once

// Grassmannian and sphere sampling shared by the spectral, DPP, game and
// mean-value modules. Every generator is deterministic given its seed.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hessgame/linalg.hpp"
#include "hessgame/rng.hpp"

namespace hessgame {

enum class Orientation {
  min_max,  // minimise over subspaces, maximise over directions
  max_min,  // the swapped game
};

std::string to_string(Orientation o);
Orientation orientation_from_string(const std::string& s);

struct SamplingBudget {
  std::size_t frames = 32;      // seeded random frames, on top of the deterministic ones
  std::size_t directions = 16;  // directions sampled inside each frame
  std::uint64_t seed = 1;
};

/// Orthonormal basis of a j-dimensional subspace of R^N.
class SubspaceFrame {
 public:
  /// Basis must be orthonormal to 1e-12 (Gram matrix vs identity).
  SubspaceFrame(std::size_t ambient_dim, std::vector<Vec> basis);

  /// Gram-Schmidt (twice) on the given vectors; throws InputError if rank deficient.
  static SubspaceFrame orthonormalize(std::size_t ambient_dim, std::vector<Vec> vectors);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const Vec& basis_vector(std::size_t k) const { return basis_[k]; }

  /// sum_k c_k b_k
  Vec embed(std::span<const double> coeffs) const;
  /// Coordinates of the orthogonal projection of x onto the subspace.
  Vec coordinates(std::span<const double> x) const;
  /// Distance from x to the subspace (through the origin).
  double distance_to(std::span<const double> x) const;

 private:
  std::size_t n_;
  std::vector<Vec> basis_;
};

/// All C(N,j) frames spanned by coordinate axes, in lexicographic order.
std::vector<SubspaceFrame> coordinate_frames(std::size_t n, std::size_t j);

/// Gaussian N x j matrix orthonormalised by Gram-Schmidt.
SubspaceFrame random_frame(std::size_t n, std::size_t j, Rng& rng);

Vec random_unit_vector(std::size_t n, Rng& rng);

/// Unit coefficient vectors in R^j: the j basis vectors first, then
/// half-circle angles (j=2), Fibonacci-sphere points (j=3) or seeded
/// Gaussian samples (j>3). Directions are sampled modulo sign.
std::vector<Vec> sphere_coefficients(std::size_t j, std::size_t count, Rng& rng);

/// sphere_coefficients mapped through the frame into R^N.
std::vector<Vec> frame_directions(const SubspaceFrame& frame, std::size_t count, Rng& rng);

/// Local pattern search on the unit sphere of the frame starting from the
/// coefficient vector `start`; returns the improved value and moves `start`.
double refine_on_frame(const SubspaceFrame& frame, Vec& start, double initial_step,
                       bool maximize, const std::function<double(std::span<const double>)>& f);

struct FrameSearchResult {
  double value = 0.0;
  std::size_t frame_index = 0;
  Vec direction;
};

/// min over frames of max over sampled directions of f (or the swapped
/// order for max_min). With `refine`, each inner optimum is polished by
/// refine_on_frame. Ties resolve to the first frame/direction found.
FrameSearchResult frame_search(const std::vector<SubspaceFrame>& frames, std::size_t directions,
                               Orientation orientation, bool refine, std::uint64_t seed,
                               const std::function<double(std::span<const double>)>& f);

}  // namespace hessgame
