#pragma once

#include "semwidth/model.hpp"

#include <optional>
#include <set>
#include <utility>

namespace semwidth {

// Backtracking search for a homomorphism a -> b. Elements are assigned in a
// fixed order (descending incident-fact count, ties lexicographic) with
// per-fact arc-consistency pruning; target values are tried in lexicographic
// order, so the returned witness is the least one under that order. `forbid`
// lists (source, target) pairs the mapping must avoid.
std::optional<Mapping> find_homomorphism(
    const Structure& a, const Structure& b,
    const std::set<std::pair<std::string, std::string>>& forbid = {});

// Total on domain(a), lands in domain(b), preserves every fact.
bool is_homomorphism(const Structure& a, const Structure& b, const Mapping& f);

// a is contained in a2 iff a homomorphism a2 -> a exists.
bool is_contained(const Structure& a, const Structure& a2);

bool hom_equivalent(const Structure& a, const Structure& a2);

struct CoreResult {
  Structure core;      // induced substructure of the input
  Mapping retraction;  // endomorphism of the input with image = core, identity on it
};

// Element-elimination loop: repeatedly look for an endomorphism whose image
// avoids some element, restrict to the image, recompose.
CoreResult compute_core(const Structure& a);

std::optional<Mapping> find_isomorphism(const Structure& a, const Structure& a2);
bool is_isomorphic(const Structure& a, const Structure& a2);

}  // namespace semwidth
