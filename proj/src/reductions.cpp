#include "semwidth/reductions.hpp"

#include "semwidth/errors.hpp"
#include "semwidth/hom.hpp"

#include <algorithm>
#include <map>

namespace semwidth {

Structure star_expand(const Structure& a) {
  Structure out = a;
  for (const auto& x : a.domain) {
    std::string rel = "U_" + x;
    if (out.signature.has(rel)) {
      throw NameCollisionError("relation already exists: " + rel);
    }
    out.signature.relations.emplace_back(rel, 1);
    out.facts[rel].insert(Fact{x});
  }
  std::sort(out.signature.relations.begin(), out.signature.relations.end());
  validate_structure(out);
  return out;
}

std::vector<Mapping> satisfying_assignments(const Structure& c, const Structure& d,
                                            const std::set<std::string>& e) {
  Hypergraph hc = hypergraph_of(c);
  bool found = false;
  for (const auto& [name, set] : hc.edges) {
    if (set == e) {
      found = true;
      break;
    }
  }
  if (!found) {
    std::string flat;
    for (const auto& v : e) flat += (flat.empty() ? "" : ",") + v;
    throw NotAnEdgeError("not an edge of the scope hypergraph: {" + flat + "}");
  }
  std::vector<std::pair<std::string, Fact>> constraints;
  for (const auto& [rel, facts] : c.facts) {
    for (const auto& t : facts) {
      std::set<std::string> elems(t.begin(), t.end());
      if (elems == e) constraints.emplace_back(rel, t);
    }
  }
  std::vector<std::string> vars(e.begin(), e.end());
  std::vector<Mapping> out;
  if (d.domain.empty()) return out;
  std::vector<size_t> pick(vars.size(), 0);
  while (true) {
    Mapping f;
    for (size_t i = 0; i < vars.size(); ++i) f[vars[i]] = d.domain[pick[i]];
    bool ok = true;
    for (const auto& [rel, t] : constraints) {
      Fact image = t;
      for (auto& x : image) x = f.at(x);
      auto it = d.facts.find(rel);
      if (it == d.facts.end() || !it->second.count(image)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(f));
    size_t i = vars.size();
    while (i > 0 && pick[i - 1] + 1 == d.domain.size()) pick[--i] = 0;
    if (i == 0) break;
    ++pick[i - 1];
  }
  return out;
}

std::pair<std::string, std::string> split_pair_element(const std::string& name) {
  size_t at = name.find('@');
  if (at == std::string::npos) {
    throw ParseError("not a pair element (no separator): " + name);
  }
  return {name.substr(0, at), name.substr(at + 1)};
}

namespace {

void verify_identification(const Structure& a, const Structure& c, const Mapping& ident) {
  Hypergraph ha = hypergraph_of(a);
  Hypergraph hc = hypergraph_of(c);
  if (ha.vertices.size() != hc.vertices.size() || ha.edges.size() != hc.edges.size()) {
    throw HypergraphMismatchError("shape and scope hypergraphs differ in size");
  }
  std::set<std::string> images;
  for (const auto& x : ha.vertices) {
    auto it = ident.find(x);
    if (it == ident.end()) throw HypergraphMismatchError("identification misses vertex: " + x);
    if (!std::binary_search(hc.vertices.begin(), hc.vertices.end(), it->second)) {
      throw HypergraphMismatchError("identification leaves the scope domain: " + it->second);
    }
    if (!images.insert(it->second).second) {
      throw HypergraphMismatchError("identification is not injective at: " + it->second);
    }
  }
  std::set<std::set<std::string>> mapped, target;
  for (const auto& [name, set] : ha.edges) {
    std::set<std::string> image;
    for (const auto& v : set) image.insert(ident.at(v));
    mapped.insert(std::move(image));
  }
  for (const auto& [name, set] : hc.edges) target.insert(set);
  if (mapped != target) {
    throw HypergraphMismatchError("identification does not carry edges onto edges");
  }
}

}  // namespace

Instance redh_reduce(const Structure& c, const Structure& d, const Structure& a,
                     const Mapping& ident) {
  if (!(c.signature == d.signature)) {
    throw SignatureMismatchError("scope and data structures have different signatures");
  }
  for (const auto& x : a.domain) {
    if (x.find('@') != std::string::npos) {
      throw NameCollisionError("shape element contains the reserved pair separator: " + x);
    }
  }
  for (const auto& delta : d.domain) {
    if (delta.find('@') != std::string::npos) {
      throw NameCollisionError("data element contains the reserved pair separator: " + delta);
    }
  }
  verify_identification(a, c, ident);
  Instance out;
  out.left = star_expand(a);
  Structure& b = out.right;
  b.signature = out.left.signature;
  for (const auto& x : a.domain) {
    for (const auto& delta : d.domain) {
      b.domain.push_back(x + "@" + delta);
      b.facts["U_" + x].insert(Fact{x + "@" + delta});
    }
  }
  std::sort(b.domain.begin(), b.domain.end());
  for (const auto& [rel, facts] : a.facts) {
    for (const auto& t : facts) {
      std::set<std::string> edge;
      for (const auto& x : t) edge.insert(ident.at(x));
      for (const Mapping& f : satisfying_assignments(c, d, edge)) {
        Fact image;
        for (const auto& x : t) image.push_back(x + "@" + f.at(ident.at(x)));
        b.facts[rel].insert(std::move(image));
      }
    }
  }
  // Relations with no realized tuples must not linger as empty entries.
  for (auto it = b.facts.begin(); it != b.facts.end();) {
    it = it->second.empty() ? b.facts.erase(it) : std::next(it);
  }
  validate_structure(out.left);
  validate_structure(b);
  return out;
}

Instance redh_reduce(const Structure& c, const Structure& d, const Structure& a) {
  Mapping ident;
  for (const auto& x : a.domain) ident[x] = x;
  return redh_reduce(c, d, a, ident);
}

Mapping redh_extract(const Structure& c, const Structure& d, const Mapping& ident,
                     const Mapping& g) {
  Mapping h;
  for (const auto& [x, y] : g) {
    auto [base, delta] = split_pair_element(y);
    if (base != x) {
      throw NotAHomomorphismError("witness does not stay on its own column: " + x + " -> " + y);
    }
    auto it = ident.find(x);
    if (it == ident.end()) throw NotAHomomorphismError("witness mentions unknown element: " + x);
    h[it->second] = delta;
  }
  if (!is_homomorphism(c, d, h)) {
    throw NotAHomomorphismError("extracted assignment does not solve the scope instance");
  }
  return h;
}

}  // namespace semwidth
