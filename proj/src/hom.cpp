#include "semwidth/hom.hpp"

#include "semwidth/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace semwidth {

namespace {

// Integer-indexed view of a search instance. Source elements are numbered in
// the fixed search order; target elements in lexicographic order.
struct SearchInstance {
  std::vector<std::string> src_names;            // by source index
  std::vector<std::string> tgt_names;            // by target index
  std::map<std::string, int> src_index;
  std::map<std::string, int> tgt_index;
  struct Constraint {
    std::vector<int> scope;                      // source indices, tuple order
    const std::vector<std::vector<int>>* tuples; // allowed target tuples
  };
  std::vector<Constraint> constraints;
  std::vector<std::vector<int>> constraints_of;  // per source index
  std::map<std::string, std::vector<std::vector<int>>> target_tuples;
};

void check_same_signature(const Structure& a, const Structure& b) {
  if (!(a.signature == b.signature))
    throw SignatureMismatchError("structures have different signatures");
}

SearchInstance build_instance(const Structure& a, const Structure& b, bool injective) {
  SearchInstance inst;
  inst.tgt_names = b.domain;
  for (std::size_t i = 0; i < inst.tgt_names.size(); ++i)
    inst.tgt_index[inst.tgt_names[i]] = static_cast<int>(i);

  std::map<std::string, int> incident;
  for (const auto& e : a.domain) incident[e] = 0;
  for (const auto& [rel, tuples] : a.facts)
    for (const auto& t : tuples)
      for (const auto& e : t) ++incident[e];

  inst.src_names = a.domain;
  std::stable_sort(inst.src_names.begin(), inst.src_names.end(),
                   [&](const std::string& x, const std::string& y) {
                     if (incident[x] != incident[y]) return incident[x] > incident[y];
                     return x < y;
                   });
  for (std::size_t i = 0; i < inst.src_names.size(); ++i)
    inst.src_index[inst.src_names[i]] = static_cast<int>(i);

  for (const auto& [rel, tuples] : b.facts) {
    auto& out = inst.target_tuples[rel];
    for (const auto& t : tuples) {
      std::vector<int> idx;
      idx.reserve(t.size());
      for (const auto& e : t) idx.push_back(inst.tgt_index.at(e));
      out.push_back(std::move(idx));
    }
  }

  inst.constraints_of.resize(inst.src_names.size());
  static const std::vector<std::vector<int>> kEmpty;
  for (const auto& [rel, tuples] : a.facts) {
    auto it = inst.target_tuples.find(rel);
    const auto* allowed = it == inst.target_tuples.end() ? &kEmpty : &it->second;
    for (const auto& t : tuples) {
      SearchInstance::Constraint c;
      for (const auto& e : t) c.scope.push_back(inst.src_index.at(e));
      c.tuples = allowed;
      int id = static_cast<int>(inst.constraints.size());
      std::set<int> scope_set(c.scope.begin(), c.scope.end());
      inst.constraints.push_back(std::move(c));
      for (int v : scope_set) inst.constraints_of[v].push_back(id);
    }
  }
  (void)injective;
  return inst;
}

struct Searcher {
  const SearchInstance& inst;
  bool injective;
  int n, m;
  std::vector<int> assignment;            // -1 = unassigned
  std::vector<std::vector<char>> allowed; // candidate matrix
  std::vector<char> used;                 // targets taken (injective mode)

  Searcher(const SearchInstance& si, bool inj)
      : inst(si),
        injective(inj),
        n(static_cast<int>(si.src_names.size())),
        m(static_cast<int>(si.tgt_names.size())),
        assignment(n, -1),
        allowed(n, std::vector<char>(m, 1)),
        used(m, 0) {}

  // Re-derives the supported targets for every unassigned variable of one
  // constraint from the current partial assignment. Returns false on wipeout.
  bool revise(int cid, std::vector<std::pair<int, int>>& trail) {
    const auto& c = inst.constraints[cid];
    std::set<int> scope(c.scope.begin(), c.scope.end());
    bool complete = true;
    for (int v : scope)
      if (assignment[v] < 0) complete = false;
    if (complete) {
      for (const auto& t : *c.tuples) {
        bool match = true;
        for (std::size_t i = 0; i < c.scope.size(); ++i)
          if (assignment[c.scope[i]] != t[i]) {
            match = false;
            break;
          }
        if (match) return true;
      }
      return false;
    }
    std::map<int, std::vector<char>> support;
    for (int v : scope)
      if (assignment[v] < 0) support[v] = std::vector<char>(m, 0);
    for (const auto& t : *c.tuples) {
      bool match = true;
      for (std::size_t i = 0; i < c.scope.size(); ++i) {
        int v = c.scope[i];
        if (assignment[v] >= 0 && assignment[v] != t[i]) {
          match = false;
          break;
        }
      }
      if (!match) continue;
      // A tuple must also be internally consistent on repeated variables.
      std::map<int, int> partial;
      bool coherent = true;
      for (std::size_t i = 0; i < c.scope.size(); ++i) {
        auto [it, fresh] = partial.emplace(c.scope[i], t[i]);
        if (!fresh && it->second != t[i]) {
          coherent = false;
          break;
        }
      }
      if (!coherent) continue;
      for (std::size_t i = 0; i < c.scope.size(); ++i) {
        int v = c.scope[i];
        if (assignment[v] < 0) support[v][t[i]] = 1;
      }
    }
    for (auto& [v, sup] : support) {
      bool any = false;
      for (int t = 0; t < m; ++t) {
        if (allowed[v][t] && !sup[t]) {
          allowed[v][t] = 0;
          trail.emplace_back(v, t);
        }
        if (allowed[v][t]) any = true;
      }
      if (!any) return false;
    }
    return true;
  }

  void undo(const std::vector<std::pair<int, int>>& trail) {
    for (auto [v, t] : trail) allowed[v][t] = 1;
  }

  bool search(int pos) {
    if (pos == n) return true;
    for (int t = 0; t < m; ++t) {
      if (!allowed[pos][t]) continue;
      if (injective && used[t]) continue;
      assignment[pos] = t;
      if (injective) used[t] = 1;
      std::vector<std::pair<int, int>> trail;
      bool viable = true;
      for (int cid : inst.constraints_of[pos])
        if (!revise(cid, trail)) {
          viable = false;
          break;
        }
      if (viable && search(pos + 1)) return true;
      undo(trail);
      assignment[pos] = -1;
      if (injective) used[t] = 0;
    }
    return false;
  }
};

std::optional<Mapping> run_search(const Structure& a, const Structure& b, bool injective,
                                  const std::set<std::pair<std::string, std::string>>& forbid) {
  if (a.domain.empty()) return Mapping{};
  if (b.domain.empty()) return std::nullopt;
  SearchInstance inst = build_instance(a, b, injective);
  Searcher searcher(inst, injective);
  for (const auto& [src, tgt] : forbid) {
    auto si = inst.src_index.find(src);
    auto ti = inst.tgt_index.find(tgt);
    if (si == inst.src_index.end() || ti == inst.tgt_index.end()) continue;
    searcher.allowed[si->second][ti->second] = 0;
  }
  for (int v = 0; v < searcher.n; ++v) {
    bool any = false;
    for (int t = 0; t < searcher.m; ++t)
      if (searcher.allowed[v][t]) any = true;
    if (!any) return std::nullopt;
  }
  // Initial arc consistency, so unary facts prune before the search starts.
  std::vector<std::pair<int, int>> trail;
  for (std::size_t cid = 0; cid < inst.constraints.size(); ++cid)
    if (!searcher.revise(static_cast<int>(cid), trail)) return std::nullopt;
  if (!searcher.search(0)) return std::nullopt;
  Mapping result;
  for (int v = 0; v < searcher.n; ++v)
    result[inst.src_names[v]] = inst.tgt_names[searcher.assignment[v]];
  return result;
}

Mapping compose(const Mapping& inner, const Mapping& outer) {
  // outer after inner; outer must be defined on inner's image.
  Mapping out;
  for (const auto& [x, y] : inner) out[x] = outer.at(y);
  return out;
}

// Per-element profile: fact counts per (relation, position), used to prune the
// isomorphism search.
std::map<std::string, std::map<std::pair<std::string, int>, int>> profiles(const Structure& s) {
  std::map<std::string, std::map<std::pair<std::string, int>, int>> out;
  for (const auto& e : s.domain) out[e];
  for (const auto& [rel, tuples] : s.facts)
    for (const auto& t : tuples)
      for (std::size_t i = 0; i < t.size(); ++i)
        ++out[t[i]][{rel, static_cast<int>(i)}];
  return out;
}

}  // namespace

std::optional<Mapping> find_homomorphism(
    const Structure& a, const Structure& b,
    const std::set<std::pair<std::string, std::string>>& forbid) {
  check_same_signature(a, b);
  return run_search(a, b, /*injective=*/false, forbid);
}

bool is_homomorphism(const Structure& a, const Structure& b, const Mapping& f) {
  for (const auto& x : a.domain) {
    auto it = f.find(x);
    if (it == f.end()) return false;
    if (!std::binary_search(b.domain.begin(), b.domain.end(), it->second)) return false;
  }
  for (const auto& [rel, facts] : a.facts) {
    auto bt = b.facts.find(rel);
    for (const auto& t : facts) {
      Fact image = t;
      for (auto& x : image) x = f.at(x);
      if (bt == b.facts.end() || !bt->second.count(image)) return false;
    }
  }
  return true;
}

bool is_contained(const Structure& a, const Structure& a2) {
  check_same_signature(a, a2);
  return find_homomorphism(a2, a).has_value();
}

bool hom_equivalent(const Structure& a, const Structure& a2) {
  return is_contained(a, a2) && is_contained(a2, a);
}

CoreResult compute_core(const Structure& a) {
  Structure cur = a;
  Mapping total;
  for (const auto& e : a.domain) total[e] = e;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& x : cur.domain) {
      // Look for an endomorphism whose image avoids x.
      std::set<std::pair<std::string, std::string>> forbid;
      for (const auto& y : cur.domain) forbid.insert({y, x});
      auto f = find_homomorphism(cur, cur, forbid);
      if (!f) continue;
      std::set<std::string> image;
      for (const auto& [from, to] : *f) image.insert(to);
      cur = restrict_structure(cur, image);
      total = compose(total, *f);
      changed = true;
      break;
    }
  }
  // Normalize so the retraction is the identity on the core: the restriction
  // of the endomorphism to the core is an automorphism; compose with its
  // inverse.
  Mapping on_core_inv;
  for (const auto& v : cur.domain) on_core_inv[total.at(v)] = v;
  Mapping retraction = compose(total, on_core_inv);
  return CoreResult{std::move(cur), std::move(retraction)};
}

std::optional<Mapping> find_isomorphism(const Structure& a, const Structure& a2) {
  check_same_signature(a, a2);
  if (a.domain.size() != a2.domain.size()) return std::nullopt;
  for (const auto& [rel, ar] : a.signature.relations) {
    auto ia = a.facts.find(rel);
    auto ib = a2.facts.find(rel);
    std::size_t ca = ia == a.facts.end() ? 0 : ia->second.size();
    std::size_t cb = ib == a2.facts.end() ? 0 : ib->second.size();
    if (ca != cb) return std::nullopt;
  }
  // An injective homomorphism between structures of equal size and equal fact
  // counts is automatically an isomorphism. Profile equality is a sound prune
  // because an injective hom cannot decrease any profile entry and the totals
  // match.
  auto pa = profiles(a);
  auto pb = profiles(a2);
  std::set<std::pair<std::string, std::string>> forbid;
  for (const auto& x : a.domain)
    for (const auto& y : a2.domain)
      if (pa.at(x) != pb.at(y)) forbid.insert({x, y});
  return run_search(a, a2, /*injective=*/true, forbid);
}

bool is_isomorphic(const Structure& a, const Structure& a2) {
  return find_isomorphism(a, a2).has_value();
}

}  // namespace semwidth
