#pragma once

#include "semwidth/model.hpp"
#include "semwidth/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace semwidth {

struct IntegralCover {
  std::vector<std::string> edges;  // sorted edge names
  long size() const { return static_cast<long>(edges.size()); }
};

// Weight assignment over all edges of the hypergraph it was computed for.
struct FractionalCover {
  std::map<std::string, Rational> weights;
  Rational total;
};

struct Transversality {
  long tau = 0;
  std::vector<std::string> tau_witness;  // sorted vertex names
  Rational tau_star;
};

struct GapReport {
  long rho = 0;
  Rational rho_star;
  long tau = 0;
  Rational tau_star;
  Rational cigap;
  Rational tigap_of_dual;
};

struct VcResult {
  int vc = 0;
  std::set<std::string> witness;
};

// Minimum number of edges covering x; deterministic witness (first optimal
// edge in name order at each step). Throws UncoverableVertexError.
IntegralCover integral_cover(const Hypergraph& h, const std::set<std::string>& x);

// Exact rational LP optimum; weights listed for every edge of h.
FractionalCover fractional_cover(const Hypergraph& h, const std::set<std::string>& x);

// Push a fractional cover of x forward along a vertex map g -> h. Every edge
// of g must map onto the vertex set of some edge of h (else
// NotAHomomorphismError); weights landing on the same edge add up, ties
// between equal h edge sets resolve to the lexicographically least name.
FractionalCover pushforward_cover(const Hypergraph& g, const Hypergraph& h,
                                  const Mapping& f, const FractionalCover& x);

// Reason the hypergraph fails to be reduced, or nullopt.
std::optional<std::string> reduced_violation(const Hypergraph& h);
bool is_reduced(const Hypergraph& h);

// Iterates isolated-vertex removal, duplicate-edge removal (keeping the
// lexicographically least name) and same-incidence vertex merging (keeping
// the lexicographically least vertex) until a fixpoint.
Hypergraph reduce(const Hypergraph& h);

// Dual of a reduced hypergraph: vertices are edge names; the edge named v
// collects the names of edges incident to v. Throws NotReducedError.
Hypergraph dual(const Hypergraph& h);

// Exact tau and tau_star of h with a deterministic minimum transversal.
Transversality transversality(const Hypergraph& h);

// rho, rho_star, tau, tau_star over the whole vertex set plus the cover /
// transversal integrality gaps. Requires a reduced hypergraph; an empty one
// reports zeros with both gaps equal to 1.
GapReport gap_report(const Hypergraph& h);

// VC dimension with the lexicographically least shattered witness of maximum
// size. An edgeless hypergraph has vc 0 with an empty witness.
VcResult vc_dimension(const Hypergraph& h);

// Lexicographically least n-element vertex set inducing at least 2^n - 1
// distinct nonempty intersections, if one exists.
std::optional<std::set<std::string>> exotic_witness(const Hypergraph& h, int n);

std::string serialize_fractional_cover(const FractionalCover& c);

}  // namespace semwidth
