#pragma once

#include "semwidth/limits.hpp"
#include "semwidth/model.hpp"
#include "semwidth/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace semwidth {

// Rooted tree of bags; node ids are vector indices, parent[root] == -1.
struct TreeDecomposition {
  std::vector<int> parent;
  std::vector<std::set<std::string>> bags;

  int node_count() const { return static_cast<int>(bags.size()); }
  int root() const;
};

// Tree decomposition plus per-node edge covers (the lambda labels).
struct CoveredDecomposition {
  TreeDecomposition base;
  std::vector<std::set<std::string>> covers;
};

struct TdValidation {
  std::vector<std::string> uncovered_edges;
  std::vector<std::string> disconnected_vertices;
  bool ok() const { return uncovered_edges.empty() && disconnected_vertices.empty(); }
};

// A cover edge at `node` whose vertices appear below the node without being
// in its bag; leaked is never empty.
struct ScvRecord {
  int node;
  std::string edge;
  std::set<std::string> leaked;
};

enum class WidthKind { tw, ghw, fhw };

struct ExactWidth {
  Rational value;
  TreeDecomposition witness;
};

// Structural checks throw InvalidDecompositionError / UnknownVertexError;
// the two semantic decomposition conditions are reported, not thrown.
TdValidation validate_td(const Hypergraph& h, const TreeDecomposition& td);

// Special condition violations, ordered by preorder node then edge name.
// Requires a valid GHD (validated bags plus bag-covering lambda labels).
std::vector<ScvRecord> scv_list(const Hypergraph& h, const CoveredDecomposition& d);

// Width of a given decomposition: max over bags of |B|-1, rho(B) or
// rho_star(B). The tw value is clamped at 0.
Rational width_of(const Hypergraph& h, const TreeDecomposition& td, WidthKind kind);

// max |lambda_u|; 0 for an empty decomposition.
long cover_width_of(const CoveredDecomposition& d);

// Exact optimum over all tree decompositions, searched through elimination
// orders (exact for these kinds since each bag metric is monotone). Isolated
// vertices never enter witness bags; an edgeless hypergraph has width 0 with
// a single empty bag.
ExactWidth exact_width(const Hypergraph& h, WidthKind kind, const SizeLimits& limits = {});

// Width-k hypertree decomposition via top-down separator search in normal
// form, or nullopt if hw(h) > k.
std::optional<CoveredDecomposition> exact_hw(const Hypergraph& h, int k,
                                             const SizeLimits& limits = {});

// Least k with a witness; 0 for an edgeless hypergraph.
long exact_hw_value(const Hypergraph& h, const SizeLimits& limits = {});

// [ (tw+1)/rank , fhw ]: a sandwich for the submodular width. Edgeless
// hypergraphs report [0, 0].
std::pair<Rational, Rational> subw_bounds(const Hypergraph& h, const SizeLimits& limits = {});

// Node ids in root-first order, children visited in ascending id.
std::vector<int> preorder(const TreeDecomposition& td);

// Drops empty bags, reattaching children to the removed node's parent.
TreeDecomposition prune_empty_bags(const TreeDecomposition& td);
CoveredDecomposition prune_empty_bags(const CoveredDecomposition& d);

struct ParsedTd {
  TreeDecomposition td;
  std::optional<std::vector<std::set<std::string>>> covers;
  std::string metric;
  Rational value;
};

std::string serialize_td(const TreeDecomposition& td, const std::string& metric,
                         const Rational& value);
std::string serialize_td(const CoveredDecomposition& d, const std::string& metric,
                         const Rational& value);
ParsedTd parse_td(const std::string& text);

}  // namespace semwidth
