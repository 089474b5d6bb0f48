#pragma once

// Dense two-phase simplex with Bland's anti-cycling rule for the small
// problems behind the envelope oracles.

#include <cstddef>
#include <vector>

#include "hessgame/linalg.hpp"

namespace hessgame {

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  double objective = 0.0;
  Vec x;
  int pivots = 0;
};

/// minimise c^T x  subject to  A x = b,  x >= 0.  `a` holds the rows of A.
LpResult solve_standard_lp(const std::vector<Vec>& a, const Vec& b, const Vec& c,
                           int max_pivots = 100000);

}  // namespace hessgame
