#include "semwidth/lp.hpp"

#include <stdexcept>

namespace semwidth {

CoveringLpSolution solve_covering_lp(int num_objects,
                                     const std::vector<std::vector<int>>& requirements) {
  int m = num_objects;                              // dual rows (one per object)
  int n = static_cast<int>(requirements.size());    // dual columns (one per requirement)
  for (const auto& req : requirements)
    if (req.empty()) throw std::logic_error("covering LP: requirement with no incident object");

  // Dual: maximize sum(y) subject to, per object i, sum of y_j over the
  // requirements j incident to i being <= 1. Columns 0..n-1 are structural,
  // n..n+m-1 slacks.
  std::vector<std::vector<Rational>> row(m, std::vector<Rational>(n + m, 0));
  std::vector<Rational> rhs(m, 1);
  for (int j = 0; j < n; ++j)
    for (int i : requirements[j]) {
      if (i < 0 || i >= m) throw std::logic_error("covering LP: object index out of range");
      row[i][j] = 1;
    }
  for (int i = 0; i < m; ++i) row[i][n + i] = 1;

  std::vector<Rational> obj(n + m, 0);  // reduced costs
  for (int j = 0; j < n; ++j) obj[j] = 1;
  Rational value = 0;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (obj[j] > 0) {
        enter = j;  // Bland: smallest improving index
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio = 0;
    for (int i = 0; i < m; ++i) {
      if (row[i][enter] <= 0) continue;
      Rational ratio = rhs[i] / row[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0)
      throw std::logic_error("covering LP: unbounded dual (uncoverable requirement)");
    Rational pivot = row[leave][enter];
    for (auto& x : row[leave]) x /= pivot;
    rhs[leave] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave || row[i][enter] == 0) continue;
      Rational factor = row[i][enter];
      for (int j = 0; j < n + m; ++j) row[i][j] -= factor * row[leave][j];
      rhs[i] -= factor * rhs[leave];
    }
    Rational factor = obj[enter];
    for (int j = 0; j < n + m; ++j) obj[j] -= factor * row[leave][j];
    value += factor * rhs[leave];
    basis[leave] = enter;
  }

  CoveringLpSolution sol;
  sol.weights.resize(m);
  sol.total = 0;
  for (int i = 0; i < m; ++i) {
    sol.weights[i] = -obj[n + i];
    sol.total += sol.weights[i];
  }
  if (sol.total != value) throw std::logic_error("covering LP: strong duality violated");
  return sol;
}

}  // namespace semwidth
