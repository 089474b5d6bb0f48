#include "hessgame/datum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hessgame/errors.hpp"

namespace hessgame {

BoundaryDatum::BoundaryDatum(std::string name, std::function<double(std::span<const double>)> fn,
                             std::optional<double> lipschitz)
    : name_(std::move(name)), fn_(std::move(fn)), lipschitz_(lipschitz) {}

BoundaryDatum BoundaryDatum::constant(double c) {
  return BoundaryDatum("constant", [c](std::span<const double>) { return c; }, 0.0);
}

BoundaryDatum BoundaryDatum::polynomial(std::vector<Monomial> terms) {
  if (terms.empty()) throw InputError("polynomial datum needs at least one term");
  for (const Monomial& t : terms)
    for (int p : t.powers)
      if (p < 0) throw InputError("polynomial exponents must be non-negative");
  auto fn = [terms = std::move(terms)](std::span<const double> x) {
    double s = 0.0;
    for (const Monomial& t : terms) {
      double v = t.coef;
      for (std::size_t k = 0; k < t.powers.size() && k < x.size(); ++k)
        for (int p = 0; p < t.powers[k]; ++p) v *= x[k];
      s += v;
    }
    return s;
  };
  return BoundaryDatum("polynomial", std::move(fn));
}

BoundaryDatum BoundaryDatum::affine(Vec slope, double intercept) {
  const double lip = norm(slope);
  auto fn = [slope = std::move(slope), intercept](std::span<const double> x) {
    return dot(slope, x) + intercept;
  };
  return BoundaryDatum("affine", std::move(fn), lip);
}

BoundaryDatum BoundaryDatum::peak(Vec center, double radius, double height) {
  if (!(radius > 0.0)) throw InputError("peak radius must be positive");
  auto fn = [center = std::move(center), radius, height](std::span<const double> x) {
    return height * std::max(0.0, 1.0 - distance(x, center) / radius);
  };
  return BoundaryDatum("peak", std::move(fn), std::abs(height) / radius);
}

BoundaryDatum BoundaryDatum::negated() const {
  auto inner = fn_;
  return BoundaryDatum("-" + name_, [inner](std::span<const double> x) { return -inner(x); },
                       lipschitz_);
}

}  // namespace hessgame
