#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hessgame/sampling.hpp"

namespace hessgame {

struct OperatorTerm {
  double weight = 1.0;
  std::size_t j = 1;  // 1-based eigenvalue index
  Orientation orientation = Orientation::min_max;
};

/// sum_i weight_i * (lambda_{j_i} game with the given orientation); weights
/// are positive and sum to one.
class OperatorSpec {
 public:
  OperatorSpec(std::size_t dim, std::vector<OperatorTerm> terms);

  static OperatorSpec lambda(std::size_t dim, std::size_t j,
                             Orientation orientation = Orientation::min_max);
  /// Average of all eigenvalues: the Laplacian up to the factor 1/N.
  static OperatorSpec laplacian(std::size_t dim);
  /// Mean of the k largest (plus) or k smallest (minus) eigenvalues.
  static OperatorSpec pucci_plus(std::size_t dim, std::size_t k);
  static OperatorSpec pucci_minus(std::size_t dim, std::size_t k);

  std::size_t dim() const { return dim_; }
  const std::vector<OperatorTerm>& terms() const { return terms_; }
  std::string describe() const;

 private:
  std::size_t dim_;
  std::vector<OperatorTerm> terms_;
};

}  // namespace hessgame
