#include "semwidth/ucq.hpp"

#include "semwidth/decomp.hpp"
#include "semwidth/errors.hpp"
#include "semwidth/hom.hpp"
#include "semwidth/solver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace semwidth {

void validate_ucq(const Ucq& u) {
  if (u.disjuncts.empty()) throw ParseError("a query needs at least one disjunct");
  for (const auto& d : u.disjuncts) {
    validate_structure(d);
    if (!(d.signature == u.disjuncts.front().signature)) {
      throw SignatureMismatchError("disjuncts do not share a signature");
    }
  }
}

Ucq parse_ucq(const std::string& text) {
  std::vector<std::string> blocks(1);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    if (trimmed == "---") {
      blocks.emplace_back();
    } else {
      blocks.back() += line + "\n";
    }
  }
  Ucq u;
  for (const auto& b : blocks) {
    Structure d = parse_structure(b);
    if (d.domain.empty() && d.facts.empty()) {
      throw ParseError("empty disjunct block in union query");
    }
    u.disjuncts.push_back(std::move(d));
  }
  // Unify the signatures: each relation keeps one arity across all blocks.
  std::map<std::string, int> arities;
  for (const auto& d : u.disjuncts) {
    for (const auto& [rel, ar] : d.signature.relations) {
      auto [it, fresh] = arities.emplace(rel, ar);
      if (!fresh && it->second != ar) {
        throw ParseError("relation " + rel + " used with arities " +
                         std::to_string(it->second) + " and " + std::to_string(ar));
      }
    }
  }
  Signature shared;
  for (const auto& [rel, ar] : arities) shared.relations.emplace_back(rel, ar);
  for (auto& d : u.disjuncts) d.signature = shared;
  validate_ucq(u);
  return u;
}

std::string serialize_ucq(const Ucq& u) {
  std::string out;
  for (size_t i = 0; i < u.disjuncts.size(); ++i) {
    if (i) out += "---\n";
    out += serialize_structure(u.disjuncts[i]);
  }
  return out;
}

Ucq make_nonredundant(const Ucq& u) {
  validate_ucq(u);
  Ucq nr = u;
  bool changed = true;
  while (changed) {
    changed = false;
    // Scanning deletion candidates from the back keeps the earliest member
    // of every equivalence class.
    for (int i = static_cast<int>(nr.disjuncts.size()) - 1; i >= 0 && !changed; --i) {
      for (size_t j = 0; j < nr.disjuncts.size(); ++j) {
        if (static_cast<int>(j) == i) continue;
        if (is_contained(nr.disjuncts[i], nr.disjuncts[j])) {
          nr.disjuncts.erase(nr.disjuncts.begin() + i);
          changed = true;
          break;
        }
      }
    }
  }
  return nr;
}

bool ucq_equivalent(const Ucq& u, const Ucq& u2) {
  validate_ucq(u);
  validate_ucq(u2);
  if (!(u.disjuncts.front().signature == u2.disjuncts.front().signature)) {
    throw SignatureMismatchError("queries have different signatures");
  }
  Ucq a = make_nonredundant(u);
  Ucq b = make_nonredundant(u2);
  if (a.disjuncts.size() != b.disjuncts.size()) return false;
  for (const auto& da : a.disjuncts) {
    int partners = 0;
    for (const auto& db : b.disjuncts) {
      if (hom_equivalent(da, db)) ++partners;
    }
    if (partners != 1) return false;
  }
  for (const auto& db : b.disjuncts) {
    int partners = 0;
    for (const auto& da : a.disjuncts) {
      if (hom_equivalent(da, db)) ++partners;
    }
    if (partners != 1) return false;
  }
  return true;
}

std::pair<Rational, Rational> ucq_semantic_subw_bounds(const Ucq& u, const SizeLimits& limits) {
  Ucq nr = make_nonredundant(u);
  Rational lo = 0, hi = 0;
  bool first = true;
  for (const auto& d : nr.disjuncts) {
    Structure core = compute_core(d).core;
    auto [l, h] = subw_bounds(hypergraph_of(core), limits);
    if (first) {
      lo = l;
      hi = h;
      first = false;
    } else {
      lo = std::max(lo, l);
      hi = std::max(hi, h);
    }
  }
  return {lo, hi};
}

bool solve_ucq(const Ucq& u, const Structure& b, const SizeLimits& limits) {
  validate_ucq(u);
  if (!(u.disjuncts.front().signature == b.signature)) {
    throw SignatureMismatchError("query and data signatures differ");
  }
  Ucq nr = make_nonredundant(u);
  for (const auto& d : nr.disjuncts) {
    if (solve_decomposed(d, b, /*use_core=*/true, limits)) return true;
  }
  return false;
}

}  // namespace semwidth
