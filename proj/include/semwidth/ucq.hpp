#pragma once

#include "semwidth/limits.hpp"
#include "semwidth/model.hpp"
#include "semwidth/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace semwidth {

// Union of conjunctive queries: a nonempty ordered list of scope structures
// over one shared signature.
struct Ucq {
  std::vector<Structure> disjuncts;
};

void validate_ucq(const Ucq& u);

// Blocks of .str facts separated by `---` lines; the blocks' signatures are
// unified (union of relations, conflicting arities rejected).
Ucq parse_ucq(const std::string& text);
std::string serialize_ucq(const Ucq& u);

// Repeatedly deletes a disjunct contained in another remaining one until no
// containment is left; within a class of equivalent disjuncts the earliest
// survives.
Ucq make_nonredundant(const Ucq& u);

// Sagiv-Yannakakis: equivalent iff the nonredundant forms pair up bijectively
// into hom-equivalent partners (partner uniqueness is verified, not assumed).
bool ucq_equivalent(const Ucq& u, const Ucq& u2);

// [max lower, max upper] of the per-disjunct core submodular-width sandwiches
// over the nonredundant form.
std::pair<Rational, Rational> ucq_semantic_subw_bounds(const Ucq& u,
                                                       const SizeLimits& limits = {});

// True iff any nonredundant disjunct's core maps into b.
bool solve_ucq(const Ucq& u, const Structure& b, const SizeLimits& limits = {});

}  // namespace semwidth
