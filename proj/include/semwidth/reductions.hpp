#pragma once

#include "semwidth/model.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace semwidth {

// Adds a singleton unary relation U_x = {x} for every domain element.
// Throws NameCollisionError if any such relation name is already taken.
Structure star_expand(const Structure& a);

// All assignments of the edge's vertices into domain(d) that satisfy every
// fact of c whose element set equals e, in lexicographic enumeration order.
// e must be an edge of hypergraph_of(c).
std::vector<Mapping> satisfying_assignments(const Structure& c, const Structure& d,
                                            const std::set<std::string>& e);

// Builds the instance (star_expand(a), B) whose solvability matches (c, d):
// B lives on the pair domain {x@delta}, pins each U_x column to {x} x D, and
// realizes each fact of a once per satisfying assignment of its edge in c.
// The identification maps domain(a) onto domain(c) and must carry
// hypergraph_of(a) edge-for-edge onto hypergraph_of(c); the overload without
// it uses the identity, requiring equal hypergraphs.
Instance redh_reduce(const Structure& c, const Structure& d, const Structure& a,
                     const Mapping& ident);
Instance redh_reduce(const Structure& c, const Structure& d, const Structure& a);

// Splits a pair-domain element at its first separator.
std::pair<std::string, std::string> split_pair_element(const std::string& name);

// Collapses a witness g for the reduced instance (shape x -> x@delta) into
// the underlying map and verifies it solves (c, d) through the
// identification. Throws NotAHomomorphismError on any mismatch.
Mapping redh_extract(const Structure& c, const Structure& d, const Mapping& ident,
                     const Mapping& g);

}  // namespace semwidth
