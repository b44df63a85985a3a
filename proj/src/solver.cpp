#include "semwidth/solver.hpp"

#include "semwidth/covers.hpp"
#include "semwidth/decomp.hpp"
#include "semwidth/errors.hpp"
#include "semwidth/hom.hpp"
#include "semwidth/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace semwidth {

namespace {

void check_signature(const Structure& a, const Structure& b) {
  if (!(a.signature == b.signature)) {
    throw SignatureMismatchError("structures have different signatures");
  }
}

}  // namespace

std::pair<bool, std::optional<Mapping>> solve_bruteforce(const Structure& a,
                                                         const Structure& b) {
  check_signature(a, b);
  size_t n = a.domain.size();
  if (n == 0) return {true, Mapping{}};
  if (b.domain.empty()) return {false, std::nullopt};
  std::vector<size_t> pick(n, 0);
  while (true) {
    Mapping f;
    for (size_t i = 0; i < n; ++i) f[a.domain[i]] = b.domain[pick[i]];
    if (is_homomorphism(a, b, f)) return {true, std::move(f)};
    size_t i = n;
    while (i > 0 && pick[i - 1] + 1 == b.domain.size()) pick[--i] = 0;
    if (i == 0) return {false, std::nullopt};
    ++pick[i - 1];
  }
}

namespace {

using Row = std::vector<std::string>;

// Bag relation: column names (sorted) plus the surviving rows.
struct BagRelation {
  std::vector<std::string> vars;
  std::set<Row> rows;
};

BagRelation materialize_bag(const Structure& pat, const Structure& b, const Hypergraph& h,
                            const std::set<std::string>& bag, SolveStats* stats) {
  BagRelation out;
  out.vars.assign(bag.begin(), bag.end());
  if (bag.empty()) {
    out.rows.insert(Row{});
    return out;
  }
  IntegralCover cover = integral_cover(h, bag);
  if (stats) stats->max_cover_size = std::max(stats->max_cover_size, cover.size());
  // Join the cover edges' satisfying assignments, agreeing on shared
  // elements; every vertex of the bag is covered, so the join is total on it.
  std::vector<Mapping> joined = {Mapping{}};
  for (const auto& ename : cover.edges) {
    const std::set<std::string>& eset = *h.edge_named(ename);
    std::vector<Mapping> fresh = satisfying_assignments(pat, b, eset);
    std::vector<Mapping> next;
    for (const auto& base : joined) {
      for (const auto& ext : fresh) {
        bool ok = true;
        for (const auto& [k, v] : ext) {
          auto it = base.find(k);
          if (it != base.end() && it->second != v) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        Mapping merged = base;
        merged.insert(ext.begin(), ext.end());
        next.push_back(std::move(merged));
      }
    }
    joined = std::move(next);
  }
  // Facts fitting inside the bag filter it, whether or not they were joined.
  std::vector<std::pair<std::string, const Fact*>> guards;
  for (const auto& [rel, facts] : pat.facts) {
    for (const auto& t : facts) {
      bool inside = true;
      for (const auto& x : t) {
        if (!bag.count(x)) {
          inside = false;
          break;
        }
      }
      if (inside) guards.emplace_back(rel, &t);
    }
  }
  for (const auto& f : joined) {
    bool ok = true;
    for (const auto& [rel, t] : guards) {
      Fact image = *t;
      for (auto& x : image) x = f.at(x);
      auto it = b.facts.find(rel);
      if (it == b.facts.end() || !it->second.count(image)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Row row;
    row.reserve(out.vars.size());
    for (const auto& v : out.vars) row.push_back(f.at(v));
    out.rows.insert(std::move(row));
  }
  return out;
}

}  // namespace

bool solve_decomposed(const Structure& a, const Structure& b, bool use_core,
                      const SizeLimits& limits, SolveStats* stats) {
  check_signature(a, b);
  Structure pat = use_core ? compute_core(a).core : a;
  if (pat.domain.empty()) return true;
  if (b.domain.empty()) return false;
  Hypergraph h = hypergraph_of(pat);
  ExactWidth ew = exact_width(h, WidthKind::ghw, limits);
  const TreeDecomposition& td = ew.witness;
  if (stats) {
    stats->bag_count = td.node_count();
    stats->decomposition_width = ew.value;
  }
  std::vector<BagRelation> rel(td.node_count());
  for (int u = 0; u < td.node_count(); ++u) {
    rel[u] = materialize_bag(pat, b, h, td.bags[u], stats);
    if (stats) {
      stats->max_bag_rows = std::max(stats->max_bag_rows, static_cast<long>(rel[u].rows.size()));
    }
  }
  std::vector<int> order = preorder(td);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    int p = td.parent[u];
    if (p < 0) continue;
    std::vector<int> shared_child, shared_parent;
    for (size_t i = 0; i < rel[u].vars.size(); ++i) {
      auto pos = std::find(rel[p].vars.begin(), rel[p].vars.end(), rel[u].vars[i]);
      if (pos != rel[p].vars.end()) {
        shared_child.push_back(static_cast<int>(i));
        shared_parent.push_back(static_cast<int>(pos - rel[p].vars.begin()));
      }
    }
    std::set<Row> seen;
    for (const auto& row : rel[u].rows) {
      Row key;
      for (int i : shared_child) key.push_back(row[i]);
      seen.insert(std::move(key));
    }
    size_t before = rel[p].rows.size();
    for (auto rit = rel[p].rows.begin(); rit != rel[p].rows.end();) {
      Row key;
      for (int i : shared_parent) key.push_back((*rit)[i]);
      rit = seen.count(key) ? std::next(rit) : rel[p].rows.erase(rit);
    }
    if (stats && rel[p].rows.size() > before) stats->semijoin_monotone = false;
  }
  return !rel[td.root()].rows.empty();
}

}  // namespace semwidth
