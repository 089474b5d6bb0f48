#pragma once

// Symmetric eigenvalues by cyclic Jacobi and the sampled Courant-Fischer
// forms  min_{dim S = j} max_{v in S} <Mv,v>  and its max-min dual.

#include <cstddef>
#include <span>
#include <vector>

#include "hessgame/linalg.hpp"
#include "hessgame/sampling.hpp"

namespace hessgame {

inline constexpr std::size_t kMaxDim = 8;

/// Real symmetric matrix of size 1..8 with packed upper-triangle storage, so
/// a(i,j) and a(j,i) are the same stored number.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n);

  /// Builds from a full row-major matrix; rows must be symmetric to 1e-12 relative.
  static SymMatrix from_rows(const std::vector<Vec>& rows);
  static SymMatrix diagonal(std::span<const double> d);
  static SymMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double value) { data_[index(i, j)] = value; }

  double trace() const;
  double frobenius_norm() const;
  bool all_finite() const;

  Vec apply(std::span<const double> v) const;
  double quadratic_form(std::span<const double> v) const;

  SymMatrix shifted(double c) const;  // M + cI
  /// Q^T M Q for a square Q given by rows.
  SymMatrix congruence(const std::vector<Vec>& q_rows) const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i + 1) / 2 + j;
  }

  std::size_t n_;
  std::vector<double> data_;
};

struct Eigensystem {
  Vec values;                 // ascending
  std::vector<Vec> vectors;   // vectors[k] pairs with values[k], orthonormal
  int sweeps = 0;
};

/// Cyclic Jacobi rotations. Stops once the off-diagonal Frobenius norm drops
/// below 1e-13 * ||M||_F, or after 100 sweeps.
Eigensystem sym_eigensystem(const SymMatrix& m);

/// Ascending eigenvalues. Throws InputError on non-finite entries and
/// InvariantError if the eigenvalues fail to reproduce the trace.
Vec sym_eigenvalues(const SymMatrix& m);

/// Sampled  min over j-frames of max over unit v in the frame of <Mv,v>.
/// The frame spanned by the j lowest eigenvectors is always part of the
/// sample, so the result equals lambda_j up to the inner maximisation.
/// `j` is 1-based.
double lambda_j_minmax(const SymMatrix& m, std::size_t j, const SamplingBudget& budget);

/// Sampled  max over j-frames of min over unit v of <Mv,v>; approximates
/// lambda_{N-j+1}.
double lambda_dual_maxmin(const SymMatrix& m, std::size_t j, const SamplingBudget& budget);

/// Returns <Mv,v> after checking it against sum_i a_i^2 lambda_i with a_i the
/// eigenbasis coordinates of v (to 1e-10 relative). v must be a unit vector.
double rayleigh_decomposition_check(const SymMatrix& m, std::span<const double> v);

}  // namespace hessgame
