#include "semwidth/covers.hpp"

#include "hg_internal.hpp"
#include "semwidth/errors.hpp"
#include "semwidth/lp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace semwidth {

namespace internal {

HgView::HgView(const Hypergraph& h) {
  if (h.vertices.size() > 64) {
    throw SizeLimitError("hypergraph has " + std::to_string(h.vertices.size()) +
                         " vertices, mask limit is 64");
  }
  verts = h.vertices;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) vidx[verts[i]] = i;
  for (const auto& [name, set] : h.edges) {
    edge_names.push_back(name);
    std::uint64_t m = 0;
    for (const auto& v : set) m |= std::uint64_t{1} << vidx.at(v);
    edge_masks.push_back(m);
  }
}

std::uint64_t HgView::full_mask() const {
  if (verts.empty()) return 0;
  if (verts.size() == 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << verts.size()) - 1;
}

std::uint64_t HgView::mask_of(const std::set<std::string>& set) const {
  std::uint64_t m = 0;
  for (const auto& v : set) {
    auto it = vidx.find(v);
    if (it == vidx.end()) throw UnknownVertexError("unknown vertex: " + v);
    m |= std::uint64_t{1} << it->second;
  }
  return m;
}

std::set<std::string> HgView::unmask(std::uint64_t mask) const {
  std::set<std::string> out;
  while (mask) {
    int i = std::countr_zero(mask);
    out.insert(verts[i]);
    mask &= mask - 1;
  }
  return out;
}

long CoverOracle::rho(std::uint64_t mask) {
  if (mask == 0) return 0;
  auto it = rho_memo.find(mask);
  if (it != rho_memo.end()) return it->second;
  int v = std::countr_zero(mask);
  long best = -1;
  for (size_t e = 0; e < view.edge_masks.size(); ++e) {
    if (!(view.edge_masks[e] >> v & 1)) continue;
    long sub = rho(mask & ~view.edge_masks[e]);
    if (best < 0 || sub + 1 < best) best = sub + 1;
  }
  if (best < 0) throw UncoverableVertexError("vertex not in any edge: " + view.verts[v]);
  rho_memo[mask] = best;
  return best;
}

std::vector<int> CoverOracle::rho_witness(std::uint64_t mask) {
  std::vector<int> picked;
  long need = rho(mask);
  while (mask) {
    int v = std::countr_zero(mask);
    bool found = false;
    for (size_t e = 0; e < view.edge_masks.size(); ++e) {
      if (!(view.edge_masks[e] >> v & 1)) continue;
      std::uint64_t rest = mask & ~view.edge_masks[e];
      if (rho(rest) + 1 == need) {
        picked.push_back(static_cast<int>(e));
        mask = rest;
        need -= 1;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("cover witness replay failed");
  }
  return picked;
}

Rational CoverOracle::rho_star(std::uint64_t mask) {
  auto it = rho_star_memo.find(mask);
  if (it != rho_star_memo.end()) return it->second;
  std::vector<std::vector<int>> reqs;
  std::uint64_t m = mask;
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    std::vector<int> incident;
    for (size_t e = 0; e < view.edge_masks.size(); ++e) {
      if (view.edge_masks[e] >> v & 1) incident.push_back(static_cast<int>(e));
    }
    if (incident.empty()) {
      throw UncoverableVertexError("vertex not in any edge: " + view.verts[v]);
    }
    reqs.push_back(std::move(incident));
  }
  Rational r = solve_covering_lp(view.edge_masks.size(), reqs).total;
  rho_star_memo[mask] = r;
  return r;
}

}  // namespace internal

using internal::CoverOracle;
using internal::HgView;

IntegralCover integral_cover(const Hypergraph& h, const std::set<std::string>& x) {
  HgView view(h);
  CoverOracle oracle(view);
  IntegralCover out;
  for (int e : oracle.rho_witness(view.mask_of(x))) out.edges.push_back(view.edge_names[e]);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

FractionalCover fractional_cover(const Hypergraph& h, const std::set<std::string>& x) {
  HgView view(h);
  std::vector<std::vector<int>> reqs;
  for (const auto& v : x) {
    auto it = view.vidx.find(v);
    if (it == view.vidx.end()) throw UnknownVertexError("unknown vertex: " + v);
    std::vector<int> incident;
    for (size_t e = 0; e < view.edge_masks.size(); ++e) {
      if (view.edge_masks[e] >> it->second & 1) incident.push_back(static_cast<int>(e));
    }
    if (incident.empty()) throw UncoverableVertexError("vertex not in any edge: " + v);
    reqs.push_back(std::move(incident));
  }
  CoveringLpSolution sol = solve_covering_lp(view.edge_masks.size(), reqs);
  FractionalCover out;
  for (size_t e = 0; e < view.edge_names.size(); ++e) out.weights[view.edge_names[e]] = sol.weights[e];
  out.total = sol.total;
  return out;
}

FractionalCover pushforward_cover(const Hypergraph& g, const Hypergraph& h,
                                  const Mapping& f, const FractionalCover& x) {
  for (const auto& v : g.vertices) {
    auto it = f.find(v);
    if (it == f.end()) throw NotAHomomorphismError("vertex not mapped: " + v);
    if (!std::binary_search(h.vertices.begin(), h.vertices.end(), it->second)) {
      throw NotAHomomorphismError("image is not a vertex of the target: " + it->second);
    }
  }
  for (const auto& [name, w] : x.weights) {
    if (!g.edge_named(name)) throw NotAnEdgeError("cover references unknown edge: " + name);
  }
  FractionalCover out;
  for (const auto& [name, set] : h.edges) out.weights[name] = 0;
  out.total = 0;
  for (const auto& [name, set] : g.edges) {
    std::set<std::string> image;
    for (const auto& v : set) image.insert(f.at(v));
    // Edges of h are sorted by name, so the first match is the least name.
    const std::string* target = nullptr;
    for (const auto& [hname, hset] : h.edges) {
      if (hset == image) {
        target = &hname;
        break;
      }
    }
    if (!target) {
      throw NotAHomomorphismError("image of edge " + name + " is not an edge of the target");
    }
    auto it = x.weights.find(name);
    Rational w = it == x.weights.end() ? Rational(0) : it->second;
    out.weights[*target] += w;
    out.total += w;
  }
  return out;
}

std::optional<std::string> reduced_violation(const Hypergraph& h) {
  std::map<std::string, std::set<std::string>> incidence;
  for (const auto& v : h.vertices) incidence[v];
  for (const auto& [name, set] : h.edges) {
    if (set.empty()) return "empty edge: " + name;
    for (const auto& v : set) incidence[v].insert(name);
  }
  for (const auto& [v, inc] : incidence) {
    if (inc.empty()) return "isolated vertex: " + v;
  }
  std::map<std::set<std::string>, std::string> seen_sets;
  for (const auto& [name, set] : h.edges) {
    auto [it, fresh] = seen_sets.emplace(set, name);
    if (!fresh) return "duplicate vertex-type: " + it->second + ", " + name;
  }
  std::map<std::set<std::string>, std::string> seen_inc;
  for (const auto& [v, inc] : incidence) {
    auto [it, fresh] = seen_inc.emplace(inc, v);
    if (!fresh) return "duplicate edge-type: " + it->second + ", " + v;
  }
  return std::nullopt;
}

bool is_reduced(const Hypergraph& h) { return !reduced_violation(h).has_value(); }

Hypergraph reduce(const Hypergraph& h) {
  Hypergraph cur = h;
  while (!is_reduced(cur)) {
    // Drop isolated vertices and empty edges.
    std::set<std::string> covered;
    for (const auto& [name, set] : cur.edges) covered.insert(set.begin(), set.end());
    std::vector<std::string> verts;
    for (const auto& v : cur.vertices) {
      if (covered.count(v)) verts.push_back(v);
    }
    std::vector<std::pair<std::string, std::set<std::string>>> edges;
    for (const auto& [name, set] : cur.edges) {
      if (!set.empty()) edges.emplace_back(name, set);
    }
    // Deduplicate equal edge sets, keeping the least name (edges are sorted).
    std::map<std::set<std::string>, std::string> keep;
    for (const auto& [name, set] : edges) keep.emplace(set, name);
    std::vector<std::pair<std::string, std::set<std::string>>> dedup;
    for (const auto& [name, set] : edges) {
      if (keep.at(set) == name) dedup.emplace_back(name, set);
    }
    // Merge vertices with identical incidence, keeping the least vertex.
    std::map<std::string, std::set<std::string>> incidence;
    for (const auto& [name, set] : dedup) {
      for (const auto& v : set) incidence[v].insert(name);
    }
    std::map<std::set<std::string>, std::string> rep;
    for (const auto& v : verts) {
      if (incidence.count(v)) rep.emplace(incidence.at(v), v);
    }
    std::vector<std::string> merged_verts;
    for (const auto& v : verts) {
      if (incidence.count(v) && rep.at(incidence.at(v)) == v) merged_verts.push_back(v);
    }
    for (auto& [name, set] : dedup) {
      std::set<std::string> ns;
      for (const auto& v : set) ns.insert(rep.at(incidence.at(v)));
      set = std::move(ns);
    }
    cur.vertices = std::move(merged_verts);
    std::sort(dedup.begin(), dedup.end());
    cur.edges = std::move(dedup);
  }
  return cur;
}

Hypergraph dual(const Hypergraph& h) {
  if (auto why = reduced_violation(h)) throw NotReducedError(*why);
  Hypergraph d;
  for (const auto& [name, set] : h.edges) d.vertices.push_back(name);
  std::sort(d.vertices.begin(), d.vertices.end());
  for (const auto& v : h.vertices) {
    std::set<std::string> inc;
    for (const auto& [name, set] : h.edges) {
      if (set.count(v)) inc.insert(name);
    }
    d.edges.emplace_back(v, std::move(inc));
  }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

Transversality transversality(const Hypergraph& h) {
  HgView view(h);
  size_t ne = view.edge_masks.size();
  if (ne > 64) throw SizeLimitError("transversality mask limit is 64 edges");
  Transversality out;
  if (ne == 0) {
    out.tau = 0;
    out.tau_star = 0;
    return out;
  }
  // Masks now range over edges; vertex v hits the edges listed in hit[v].
  std::vector<std::uint64_t> hit(view.verts.size(), 0);
  for (size_t e = 0; e < ne; ++e) {
    std::uint64_t m = view.edge_masks[e];
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      hit[v] |= std::uint64_t{1} << e;
    }
  }
  std::map<std::uint64_t, long> memo;
  auto tau_of = [&](auto&& self, std::uint64_t mask) -> long {
    if (mask == 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int e = std::countr_zero(mask);
    long best = -1;
    // Every edge is nonempty per the structural invariant, so a pick exists.
    std::uint64_t em = view.edge_masks[e];
    while (em) {
      int v = std::countr_zero(em);
      em &= em - 1;
      long sub = self(self, mask & ~hit[v]);
      if (best < 0 || sub + 1 < best) best = sub + 1;
    }
    memo[mask] = best;
    return best;
  };
  std::uint64_t all = ne == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ne) - 1;
  out.tau = tau_of(tau_of, all);
  std::uint64_t mask = all;
  long need = out.tau;
  while (mask) {
    int e = std::countr_zero(mask);
    bool found = false;
    std::uint64_t em = view.edge_masks[e];
    while (em) {
      int v = std::countr_zero(em);
      em &= em - 1;
      std::uint64_t rest = mask & ~hit[v];
      if (tau_of(tau_of, rest) + 1 == need) {
        out.tau_witness.push_back(view.verts[v]);
        mask = rest;
        need -= 1;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("transversal witness replay failed");
  }
  std::sort(out.tau_witness.begin(), out.tau_witness.end());
  // Fractional transversal: objects are vertices, requirements are edges.
  std::vector<std::vector<int>> reqs;
  for (size_t e = 0; e < ne; ++e) {
    std::vector<int> verts_of;
    std::uint64_t m = view.edge_masks[e];
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      verts_of.push_back(v);
    }
    reqs.push_back(std::move(verts_of));
  }
  out.tau_star = solve_covering_lp(view.verts.size(), reqs).total;
  return out;
}

GapReport gap_report(const Hypergraph& h) {
  if (auto why = reduced_violation(h)) throw NotReducedError(*why);
  GapReport out;
  if (h.vertices.empty()) {
    out.rho_star = 0;
    out.tau_star = 0;
    out.cigap = 1;
    out.tigap_of_dual = 1;
    return out;
  }
  std::set<std::string> all(h.vertices.begin(), h.vertices.end());
  out.rho = integral_cover(h, all).size();
  out.rho_star = fractional_cover(h, all).total;
  Transversality t = transversality(h);
  out.tau = t.tau;
  out.tau_star = t.tau_star;
  out.cigap = Rational(out.rho) / out.rho_star;
  Transversality td = transversality(dual(h));
  out.tigap_of_dual = Rational(td.tau) / td.tau_star;
  if (out.cigap != out.tigap_of_dual) {
    throw std::logic_error("cover gap of h differs from transversal gap of dual(h)");
  }
  return out;
}

namespace {

// True iff every subset of the index set occurs as an edge intersection.
bool shattered(const std::vector<std::uint64_t>& edge_masks, std::uint64_t x, int k) {
  std::set<std::uint64_t> traces;
  for (std::uint64_t e : edge_masks) traces.insert(e & x);
  return traces.size() == (std::uint64_t{1} << k);
}

// Calls fn on index combinations of size k in lexicographic order until it
// returns true; reports whether any call did.
bool first_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  while (true) {
    if (fn(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

VcResult vc_dimension(const Hypergraph& h) {
  VcResult out;
  if (h.edges.empty()) return out;
  HgView view(h);
  int n = static_cast<int>(view.verts.size());
  for (int k = 1; k <= n; ++k) {
    std::vector<int> found;
    bool ok = first_combination(n, k, [&](const std::vector<int>& idx) {
      std::uint64_t x = 0;
      for (int i : idx) x |= std::uint64_t{1} << i;
      if (!shattered(view.edge_masks, x, k)) return false;
      found = idx;
      return true;
    });
    if (!ok) break;
    out.vc = k;
    out.witness.clear();
    for (int i : found) out.witness.insert(view.verts[i]);
  }
  return out;
}

std::optional<std::set<std::string>> exotic_witness(const Hypergraph& h, int n) {
  if (n < 0) throw std::invalid_argument("witness size must be nonnegative");
  if (n == 0) return std::set<std::string>{};
  HgView view(h);
  int nv = static_cast<int>(view.verts.size());
  if (n > nv) return std::nullopt;
  // Induced distinct intersections are capped by the edge count, so a small
  // edge set rules out large witnesses without enumeration.
  if (n > 62 || view.edge_masks.size() < (std::uint64_t{1} << n) - 1) return std::nullopt;
  std::set<std::string> witness;
  bool ok = first_combination(nv, n, [&](const std::vector<int>& idx) {
    std::uint64_t x = 0;
    for (int i : idx) x |= std::uint64_t{1} << i;
    std::set<std::uint64_t> traces;
    for (std::uint64_t e : view.edge_masks) {
      if (e & x) traces.insert(e & x);
    }
    if (traces.size() < (std::uint64_t{1} << n) - 1) return false;
    for (int i : idx) witness.insert(view.verts[i]);
    return true;
  });
  if (!ok) return std::nullopt;
  return witness;
}

std::string serialize_fractional_cover(const FractionalCover& c) {
  std::ostringstream out;
  for (const auto& [name, w] : c.weights) {
    out << name << ' ' << rational_fraction(w) << '\n';
  }
  out << "total " << rational_fraction(c.total) << '\n';
  return out.str();
}

}  // namespace semwidth
