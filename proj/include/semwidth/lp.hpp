#pragma once

#include "semwidth/rational.hpp"

#include <vector>

namespace semwidth {

struct CoveringLpSolution {
  std::vector<Rational> weights;  // one per object, all >= 0
  Rational total;
};

// Exact minimum-weight covering LP: choose object weights >= 0 so that every
// requirement (given as the list of objects incident to it) receives total
// weight >= 1. Solved by running the primal simplex with Bland's rule on the
// packing dual (which starts feasible at 0); the optimal cover weights are the
// reduced costs of the slack columns, and strong duality is asserted exactly.
// Every requirement must have at least one incident object.
CoveringLpSolution solve_covering_lp(int num_objects,
                                     const std::vector<std::vector<int>>& requirements);

}  // namespace semwidth
