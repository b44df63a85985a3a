#pragma once

#include "semwidth/decomp.hpp"
#include "semwidth/limits.hpp"
#include "semwidth/model.hpp"
#include "semwidth/rational.hpp"

namespace semwidth {

enum class SemanticKind { rho_star, fhw, ghw, subw_bounds };

// Width of the equivalence class of a structure, reached through its core.
// lower == upper for every kind except subw_bounds with a genuine gap.
struct SemanticWidth {
  Rational lower;
  Rational upper;
  Structure core;
  bool is_point() const { return lower == upper; }
};

SemanticWidth semantic_width(const Structure& a, SemanticKind kind,
                             const SizeLimits& limits = {});

struct ScvRepairResult {
  Structure structure;
  CoveredDecomposition decomposition;
  int repairs = 0;
};

// Removes special condition violations one at a time: for the first record
// (preorder node, then edge name), every vertex of the offending edge outside
// the bag is replaced by a fresh constant in a copied fact, the bag absorbs
// the fresh constants, and the cover swaps in the new edge. Width is
// preserved exactly and the result is hom-equivalent to the input.
ScvRepairResult scv_repair(const Structure& a, const CoveredDecomposition& d);

struct SemanticHw {
  long value = 0;
  Structure structure;
  CoveredDecomposition decomposition;
};

// Semantic hypertree width = ghw of the core, witnessed by an equivalent
// structure with a violation-free decomposition of that exact width.
SemanticHw semantic_hw(const Structure& a, const SizeLimits& limits = {});

}  // namespace semwidth
