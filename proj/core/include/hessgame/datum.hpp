#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hessgame/linalg.hpp"

namespace hessgame {

struct Monomial {
  double coef = 0.0;
  std::vector<int> powers;  // one exponent per coordinate
};

/// Closed-form boundary datum g, evaluated directly at exit points outside the domain.
class BoundaryDatum {
 public:
  BoundaryDatum(std::string name, std::function<double(std::span<const double>)> fn,
                std::optional<double> lipschitz = std::nullopt);

  static BoundaryDatum constant(double c);
  static BoundaryDatum polynomial(std::vector<Monomial> terms);
  static BoundaryDatum affine(Vec slope, double intercept);
  /// Cone bump: height * max(0, 1 - |x - center| / radius). Continuous, equal
  /// to `height` at the center and 0 outside B_radius(center).
  static BoundaryDatum peak(Vec center, double radius, double height);

  double operator()(std::span<const double> x) const { return fn_(x); }
  const std::string& name() const { return name_; }
  std::optional<double> lipschitz() const { return lipschitz_; }

  BoundaryDatum negated() const;

 private:
  std::string name_;
  std::function<double(std::span<const double>)> fn_;
  std::optional<double> lipschitz_;
};

}  // namespace hessgame
