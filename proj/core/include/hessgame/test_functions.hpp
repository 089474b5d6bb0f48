#pragma once

// Smooth test functions with analytic derivatives:
//   phi(x) = 1/2 <Ax,x> + <b,x> + c + sum_k c_k f_k(<w_k,x>)
// with ridge profiles f in {sin, cos, exp, cosh, quartic}.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hessgame/linalg.hpp"
#include "hessgame/spectral.hpp"

namespace hessgame {

enum class Ridge { sin, cos, exp, cosh, quartic };

struct RidgeTerm {
  double coef = 1.0;
  Ridge profile = Ridge::sin;
  Vec w;
};

class SmoothTestFunction {
 public:
  SmoothTestFunction(std::string name, SymMatrix a, Vec b, double c, std::vector<RidgeTerm> ridges);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return a_.dim(); }
  bool is_quadratic() const { return ridges_.empty(); }

  double value(std::span<const double> x) const;
  Vec gradient(std::span<const double> x) const;
  SymMatrix hessian(std::span<const double> x) const;
  /// phi(x + d) + phi(x - d) - 2 phi(x), without cancellation.
  double second_difference(std::span<const double> x, std::span<const double> d) const;

 private:
  std::string name_;
  SymMatrix a_;
  Vec b_;
  double c_;
  std::vector<RidgeTerm> ridges_;
};

/// Hessian from second differences with step s (diagonal directly,
/// off-diagonal by polarisation).
SymMatrix fd_hessian(const SmoothTestFunction& f, std::span<const double> x, double step);

/// 20 functions in dimensions 2 to 4, each with a base point.
struct CatalogEntry {
  SmoothTestFunction fn;
  Vec point;
};
std::vector<CatalogEntry> test_function_catalog();

}  // namespace hessgame
