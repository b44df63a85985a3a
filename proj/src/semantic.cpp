#include "semwidth/semantic.hpp"

#include "semwidth/covers.hpp"
#include "semwidth/errors.hpp"
#include "semwidth/hom.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace semwidth {

SemanticWidth semantic_width(const Structure& a, SemanticKind kind, const SizeLimits& limits) {
  SemanticWidth out;
  out.core = compute_core(a).core;
  Hypergraph h = hypergraph_of(out.core);
  switch (kind) {
    case SemanticKind::rho_star: {
      std::set<std::string> nz;
      for (const auto& [name, set] : h.edges) nz.insert(set.begin(), set.end());
      Rational v = nz.empty() ? Rational(0) : fractional_cover(h, nz).total;
      out.lower = out.upper = v;
      break;
    }
    case SemanticKind::fhw:
      out.lower = out.upper = exact_width(h, WidthKind::fhw, limits).value;
      break;
    case SemanticKind::ghw:
      out.lower = out.upper = exact_width(h, WidthKind::ghw, limits).value;
      break;
    case SemanticKind::subw_bounds: {
      auto [lo, hi] = subw_bounds(h, limits);
      out.lower = lo;
      out.upper = hi;
      break;
    }
  }
  return out;
}

namespace {

// Covers tracked as vertex sets while the structure (and hence the edge
// naming) evolves; names are rebound against the current hypergraph.
std::vector<std::vector<std::set<std::string>>> cover_sets(const Hypergraph& h,
                                                           const CoveredDecomposition& d) {
  std::vector<std::vector<std::set<std::string>>> out(d.covers.size());
  for (size_t u = 0; u < d.covers.size(); ++u) {
    for (const auto& name : d.covers[u]) {
      const std::set<std::string>* set = h.edge_named(name);
      if (!set) throw InvalidDecompositionError("cover references unknown edge: " + name);
      out[u].push_back(*set);
    }
  }
  return out;
}

std::vector<std::set<std::string>> bind_names(const Hypergraph& h,
                                              const std::vector<std::vector<std::set<std::string>>>& sets) {
  std::map<std::set<std::string>, std::string> by_set;
  for (const auto& [name, set] : h.edges) by_set.emplace(set, name);
  std::vector<std::set<std::string>> out(sets.size());
  for (size_t u = 0; u < sets.size(); ++u) {
    for (const auto& s : sets[u]) out[u].insert(by_set.at(s));
  }
  return out;
}

}  // namespace

ScvRepairResult scv_repair(const Structure& a, const CoveredDecomposition& d) {
  ScvRepairResult out;
  out.structure = a;
  out.decomposition = d;
  Hypergraph h = hypergraph_of(out.structure);
  std::vector<ScvRecord> records = scv_list(h, out.decomposition);
  auto sets = cover_sets(h, out.decomposition);
  int counter = 1;
  while (!records.empty()) {
    const ScvRecord& rec = records.front();
    const std::set<std::string> estar = *h.edge_named(rec.edge);
    std::set<std::string>& bag = out.decomposition.base.bags[rec.node];
    std::set<std::string> outside;
    for (const auto& v : estar) {
      if (!bag.count(v)) outside.insert(v);
    }
    // Lexicographically least (relation, tuple) realizing the edge.
    const std::string* rel = nullptr;
    const Fact* fact = nullptr;
    for (const auto& [rname, facts] : out.structure.facts) {
      for (const auto& t : facts) {
        std::set<std::string> elems(t.begin(), t.end());
        if (elems == estar) {
          rel = &rname;
          fact = &t;
          break;
        }
      }
      if (rel) break;
    }
    if (!rel) throw std::logic_error("cover edge has no realizing fact");
    std::map<std::string, std::string> fresh;
    for (const auto& v : outside) {
      std::string name;
      do {
        name = "_scv" + std::to_string(counter++);
      } while (std::binary_search(out.structure.domain.begin(), out.structure.domain.end(), name));
      fresh[v] = name;
    }
    Fact copy = *fact;
    for (auto& x : copy) {
      auto it = fresh.find(x);
      if (it != fresh.end()) x = it->second;
    }
    std::string relname = *rel;
    for (const auto& [v, x] : fresh) {
      out.structure.domain.insert(
          std::upper_bound(out.structure.domain.begin(), out.structure.domain.end(), x), x);
      bag.insert(x);
    }
    out.structure.facts[relname].insert(copy);
    std::set<std::string> eprime(copy.begin(), copy.end());
    auto& node_sets = sets[rec.node];
    node_sets.erase(std::find(node_sets.begin(), node_sets.end(), estar));
    node_sets.push_back(eprime);
    h = hypergraph_of(out.structure);
    {
      auto names = bind_names(h, sets);
      for (size_t u = 0; u < names.size(); ++u) out.decomposition.covers[u] = std::move(names[u]);
    }
    size_t before = records.size();
    records = scv_list(h, out.decomposition);
    if (records.size() >= before) throw std::logic_error("repair failed to reduce violations");
    ++out.repairs;
  }
  return out;
}

SemanticHw semantic_hw(const Structure& a, const SizeLimits& limits) {
  Structure core = compute_core(a).core;
  Hypergraph h = hypergraph_of(core);
  ExactWidth ew = exact_width(h, WidthKind::ghw, limits);
  if (denominator(ew.value) != 1) throw std::logic_error("integral width came out fractional");
  CoveredDecomposition covered;
  covered.base = ew.witness;
  covered.covers.resize(covered.base.bags.size());
  for (size_t u = 0; u < covered.base.bags.size(); ++u) {
    for (const auto& e : integral_cover(h, covered.base.bags[u]).edges) {
      covered.covers[u].insert(e);
    }
  }
  ScvRepairResult repaired = scv_repair(core, covered);
  SemanticHw out;
  out.value = static_cast<long>(numerator(ew.value));
  out.structure = std::move(repaired.structure);
  out.decomposition = std::move(repaired.decomposition);
  return out;
}

}  // namespace semwidth
