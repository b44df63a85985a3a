#pragma once

#include "semwidth/limits.hpp"
#include "semwidth/model.hpp"
#include "semwidth/rational.hpp"

#include <optional>
#include <utility>

namespace semwidth {

struct SolveStats {
  long bag_count = 0;
  long max_bag_rows = 0;
  long max_cover_size = 0;
  bool semijoin_monotone = true;
  Rational decomposition_width;
};

// Plain exhaustive enumeration of all |B|^|A| assignments with a full check
// at each leaf; the independent oracle the guided solver is tested against.
std::pair<bool, std::optional<Mapping>> solve_bruteforce(const Structure& a,
                                                         const Structure& b);

// Decides (a, b) along a minimum integral-cover-width tree decomposition of
// the scope hypergraph (of the core when use_core): bags are materialized by
// joining their cover edges' satisfying assignments, filtered by every fact
// fitting the bag, then shrunk by one bottom-up semijoin pass.
bool solve_decomposed(const Structure& a, const Structure& b, bool use_core,
                      const SizeLimits& limits = {}, SolveStats* stats = nullptr);

}  // namespace semwidth
