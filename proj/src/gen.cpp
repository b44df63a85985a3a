#include "semwidth/gen.hpp"

#include "semwidth/errors.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace semwidth {

namespace {

int pick_range(std::mt19937_64& rng, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty generator range");
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

void sample_tuples(std::mt19937_64& rng, Structure& s, const std::string& rel, int arity,
                   int density_percent) {
  // Walk all |domain|^arity candidate tuples in lexicographic order, drawing
  // once per candidate so output depends only on the seed.
  std::vector<size_t> pick(arity, 0);
  size_t n = s.domain.size();
  if (n == 0) return;
  while (true) {
    Fact t;
    for (int i = 0; i < arity; ++i) t.push_back(s.domain[pick[i]]);
    if (static_cast<int>(rng() % 100) < density_percent) s.facts[rel].insert(std::move(t));
    int i = arity;
    while (i > 0 && pick[i - 1] + 1 == n) pick[--i] = 0;
    if (i == 0) break;
    ++pick[i - 1];
  }
}

}  // namespace

Structure gen_random_structure(std::uint64_t seed, const RandomStructureParams& p) {
  std::mt19937_64 rng(seed);
  Structure s;
  int elements = pick_range(rng, p.min_elements, p.max_elements);
  for (int i = 1; i <= elements; ++i) s.domain.push_back("x" + std::to_string(i));
  int relations = pick_range(rng, p.min_relations, p.max_relations);
  for (int r = 1; r <= relations; ++r) {
    s.signature.relations.emplace_back("R" + std::to_string(r), pick_range(rng, 1, p.max_arity));
  }
  for (const auto& [rel, arity] : s.signature.relations) {
    sample_tuples(rng, s, rel, arity, p.density_percent);
  }
  for (auto it = s.facts.begin(); it != s.facts.end();) {
    it = it->second.empty() ? s.facts.erase(it) : std::next(it);
  }
  validate_structure(s);
  return s;
}

Structure gen_random_structure_over(const Signature& sig, int elements, int density_percent,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Structure s;
  s.signature = sig;
  for (int i = 1; i <= elements; ++i) s.domain.push_back("d" + std::to_string(i));
  for (const auto& [rel, arity] : sig.relations) {
    sample_tuples(rng, s, rel, arity, density_percent);
  }
  for (auto it = s.facts.begin(); it != s.facts.end();) {
    it = it->second.empty() ? s.facts.erase(it) : std::next(it);
  }
  validate_structure(s);
  return s;
}

Hypergraph gen_random_hypergraph(int vertices, int edges, std::uint64_t seed) {
  if (vertices < 1 || edges < 0) throw std::invalid_argument("bad hypergraph dimensions");
  std::mt19937_64 rng(seed);
  Hypergraph h;
  for (int i = 1; i <= vertices; ++i) h.vertices.push_back("v" + std::to_string(i));
  std::sort(h.vertices.begin(), h.vertices.end());
  for (int e = 1; e <= edges; ++e) {
    int size = pick_range(rng, 1, std::min(vertices, 4));
    std::set<std::string> set;
    while (static_cast<int>(set.size()) < size) {
      set.insert(h.vertices[rng() % h.vertices.size()]);
    }
    h.edges.emplace_back("e" + std::to_string(e), std::move(set));
  }
  std::sort(h.edges.begin(), h.edges.end());
  validate_hypergraph(h);
  return h;
}

CoveredDecomposition gen_sloppy_ghd(const Structure& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Hypergraph h = hypergraph_of(a);
  CoveredDecomposition out;
  out.base = exact_width(h, WidthKind::tw).witness;
  out.covers.resize(out.base.bags.size());
  for (size_t u = 0; u < out.base.bags.size(); ++u) {
    std::set<std::string> uncovered = out.base.bags[u];
    while (!uncovered.empty()) {
      std::vector<const std::pair<std::string, std::set<std::string>>*> hitting;
      for (const auto& edge : h.edges) {
        for (const auto& v : edge.second) {
          if (uncovered.count(v)) {
            hitting.push_back(&edge);
            break;
          }
        }
      }
      const auto& picked = *hitting[rng() % hitting.size()];
      out.covers[u].insert(picked.first);
      for (const auto& v : picked.second) uncovered.erase(v);
    }
  }
  return out;
}

}  // namespace semwidth
