#pragma once

#include "semwidth/decomp.hpp"
#include "semwidth/model.hpp"

#include <cstdint>

namespace semwidth {

struct RandomStructureParams {
  int min_elements = 2;
  int max_elements = 6;
  int min_relations = 1;
  int max_relations = 3;
  int max_arity = 3;
  int density_percent = 18;  // inclusion chance per candidate tuple
};

// All generators are pure functions of their seed.
Structure gen_random_structure(std::uint64_t seed, const RandomStructureParams& p = {});

// Same tuple-sampling process over a fixed signature (for data structures
// paired with generated scopes).
Structure gen_random_structure_over(const Signature& sig, int elements, int density_percent,
                                    std::uint64_t seed);

Hypergraph gen_random_hypergraph(int vertices, int edges, std::uint64_t seed);

// Valid GHD of hypergraph_of(a) whose per-bag covers are picked at random
// rather than minimally, so cover edges tend to leak into subtrees.
CoveredDecomposition gen_sloppy_ghd(const Structure& a, std::uint64_t seed);

}  // namespace semwidth
