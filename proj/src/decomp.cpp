#include "semwidth/decomp.hpp"

#include "hg_internal.hpp"
#include "semwidth/covers.hpp"
#include "semwidth/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace semwidth {

using internal::CoverOracle;
using internal::HgView;

int TreeDecomposition::root() const {
  for (int i = 0; i < node_count(); ++i) {
    if (parent[i] == -1) return i;
  }
  return -1;
}

namespace {

std::vector<std::vector<int>> children_of(const TreeDecomposition& td) {
  std::vector<std::vector<int>> ch(td.node_count());
  for (int i = 0; i < td.node_count(); ++i) {
    if (td.parent[i] >= 0) ch[td.parent[i]].push_back(i);
  }
  return ch;
}

void check_tree_shape(const TreeDecomposition& td) {
  int n = td.node_count();
  if (static_cast<int>(td.parent.size()) != n) {
    throw InvalidDecompositionError("parent and bag lists have different lengths");
  }
  if (n == 0) return;
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    if (td.parent[i] == -1) {
      ++roots;
    } else if (td.parent[i] < 0 || td.parent[i] >= n || td.parent[i] == i) {
      throw InvalidDecompositionError("node " + std::to_string(i) + " has an invalid parent");
    }
  }
  if (roots != 1) {
    throw InvalidDecompositionError("expected exactly one root, found " + std::to_string(roots));
  }
  // Reachability from the root proves acyclicity.
  auto ch = children_of(td);
  std::vector<int> stack = {td.root()};
  int seen = 0;
  std::vector<char> vis(n, 0);
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (vis[u]) throw InvalidDecompositionError("parent links contain a cycle");
    vis[u] = 1;
    ++seen;
    for (int c : ch[u]) stack.push_back(c);
  }
  if (seen != n) throw InvalidDecompositionError("parent links contain a cycle");
}

}  // namespace

TdValidation validate_td(const Hypergraph& h, const TreeDecomposition& td) {
  check_tree_shape(td);
  for (const auto& bag : td.bags) {
    for (const auto& v : bag) {
      if (!std::binary_search(h.vertices.begin(), h.vertices.end(), v)) {
        throw UnknownVertexError("bag vertex is not in the hypergraph: " + v);
      }
    }
  }
  TdValidation report;
  for (const auto& [name, set] : h.edges) {
    bool covered = false;
    for (const auto& bag : td.bags) {
      if (std::includes(bag.begin(), bag.end(), set.begin(), set.end())) {
        covered = true;
        break;
      }
    }
    if (!covered) report.uncovered_edges.push_back(name);
  }
  auto ch = children_of(td);
  for (const auto& v : h.vertices) {
    std::vector<int> occ;
    for (int i = 0; i < td.node_count(); ++i) {
      if (td.bags[i].count(v)) occ.push_back(i);
    }
    if (occ.size() <= 1) continue;
    std::vector<char> in(td.node_count(), 0);
    for (int i : occ) in[i] = 1;
    std::vector<int> stack = {occ[0]};
    std::vector<char> vis(td.node_count(), 0);
    vis[occ[0]] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      std::vector<int> adj = ch[u];
      if (td.parent[u] >= 0) adj.push_back(td.parent[u]);
      for (int w : adj) {
        if (in[w] && !vis[w]) {
          vis[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != occ.size()) report.disconnected_vertices.push_back(v);
  }
  return report;
}

std::vector<int> preorder(const TreeDecomposition& td) {
  std::vector<int> order;
  if (td.node_count() == 0) return order;
  auto ch = children_of(td);
  std::vector<int> stack = {td.root()};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (auto it = ch[u].rbegin(); it != ch[u].rend(); ++it) stack.push_back(*it);
  }
  return order;
}

std::vector<ScvRecord> scv_list(const Hypergraph& h, const CoveredDecomposition& d) {
  TdValidation val = validate_td(h, d.base);
  if (!val.ok()) {
    std::string why = "not a valid decomposition:";
    for (const auto& e : val.uncovered_edges) why += " uncovered edge " + e + ";";
    for (const auto& v : val.disconnected_vertices) why += " disconnected vertex " + v + ";";
    throw InvalidDecompositionError(why);
  }
  if (d.covers.size() != d.base.bags.size()) {
    throw InvalidDecompositionError("cover list and bag list have different lengths");
  }
  int n = d.base.node_count();
  std::vector<std::set<std::string>> cover_union(n);
  for (int u = 0; u < n; ++u) {
    for (const auto& name : d.covers[u]) {
      const std::set<std::string>* set = h.edge_named(name);
      if (!set) throw InvalidDecompositionError("cover references unknown edge: " + name);
      cover_union[u].insert(set->begin(), set->end());
    }
    for (const auto& v : d.base.bags[u]) {
      if (!cover_union[u].count(v)) {
        throw InvalidDecompositionError("bag vertex " + v + " not covered at node " +
                                        std::to_string(u));
      }
    }
  }
  std::vector<int> order = preorder(d.base);
  // Subtree bag unions, accumulated leaf-first.
  std::vector<std::set<std::string>> below(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    below[u].insert(d.base.bags[u].begin(), d.base.bags[u].end());
    if (d.base.parent[u] >= 0) {
      below[d.base.parent[u]].insert(below[u].begin(), below[u].end());
    }
  }
  std::vector<ScvRecord> records;
  for (int u : order) {
    for (const auto& name : d.covers[u]) {
      const std::set<std::string>& eset = *h.edge_named(name);
      std::set<std::string> leaked;
      for (const auto& v : eset) {
        if (below[u].count(v) && !d.base.bags[u].count(v)) leaked.insert(v);
      }
      if (!leaked.empty()) records.push_back({u, name, std::move(leaked)});
    }
  }
  return records;
}

Rational width_of(const Hypergraph& h, const TreeDecomposition& td, WidthKind kind) {
  TdValidation val = validate_td(h, td);
  if (!val.ok()) throw InvalidDecompositionError("width of an invalid decomposition");
  if (kind == WidthKind::tw) {
    long best = 0;
    for (const auto& bag : td.bags) best = std::max(best, static_cast<long>(bag.size()) - 1);
    return Rational(best);
  }
  HgView view(h);
  CoverOracle oracle(view);
  Rational best = 0;
  for (const auto& bag : td.bags) {
    Rational w = kind == WidthKind::ghw ? Rational(oracle.rho(view.mask_of(bag)))
                                        : oracle.rho_star(view.mask_of(bag));
    best = std::max(best, w);
  }
  return best;
}

long cover_width_of(const CoveredDecomposition& d) {
  size_t best = 0;
  for (const auto& c : d.covers) best = std::max(best, c.size());
  return static_cast<long>(best);
}

namespace {

long limit_for(WidthKind kind, const SizeLimits& limits) {
  switch (kind) {
    case WidthKind::tw: return limits.tw;
    case WidthKind::ghw: return limits.ghw;
    case WidthKind::fhw: return limits.fhw;
  }
  return 0;
}

const char* kind_name(WidthKind kind) {
  switch (kind) {
    case WidthKind::tw: return "tw";
    case WidthKind::ghw: return "ghw";
    case WidthKind::fhw: return "fhw";
  }
  return "?";
}

// Contract tree edges whose endpoint bags nest. Edge coverage and the
// running-intersection property survive the merge, and dropping a bag never
// raises the width, so this only tightens the witness.
void contract_subsumed_bags(TreeDecomposition& td) {
  auto contains = [](const std::set<std::string>& big, const std::set<std::string>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  bool changed = true;
  while (changed) {
    changed = false;
    int n = td.node_count();
    for (int i = 0; i < n && !changed; ++i) {
      int p = td.parent[i];
      if (p < 0) continue;
      int drop, keep;
      if (contains(td.bags[p], td.bags[i])) {
        drop = i;
        keep = p;
      } else if (contains(td.bags[i], td.bags[p])) {
        drop = p;
        keep = i;
      } else {
        continue;
      }
      TreeDecomposition next;
      std::vector<int> newid(n, -1);
      for (int j = 0, k = 0; j < n; ++j) {
        if (j != drop) newid[j] = k++;
      }
      next.bags.resize(n - 1);
      next.parent.assign(n - 1, -1);
      for (int j = 0; j < n; ++j) {
        if (j == drop) continue;
        next.bags[newid[j]] = td.bags[j];
        int q = td.parent[j];
        if (j == keep && drop == p) {
          q = td.parent[drop];
        } else if (q == drop) {
          q = keep;
        }
        next.parent[newid[j]] = q < 0 ? -1 : newid[q];
      }
      td = std::move(next);
      changed = true;
    }
  }
}

}  // namespace

ExactWidth exact_width(const Hypergraph& h, WidthKind kind, const SizeLimits& limits) {
  long limit = limit_for(kind, limits);
  if (static_cast<long>(h.vertices.size()) > limit) {
    throw SizeLimitError(std::string(kind_name(kind)) + " limit is " + std::to_string(limit) +
                         " vertices, got " + std::to_string(h.vertices.size()));
  }
  HgView view(h);
  CoverOracle oracle(view);
  // Isolated vertices are dropped: they belong to no edge and add nothing to
  // any of the supported bag metrics.
  std::vector<int> nz;
  {
    std::uint64_t covered = 0;
    for (std::uint64_t e : view.edge_masks) covered |= e;
    for (size_t i = 0; i < view.verts.size(); ++i) {
      if (covered >> i & 1) nz.push_back(static_cast<int>(i));
    }
  }
  int m = static_cast<int>(nz.size());
  if (m == 0) {
    ExactWidth out;
    out.value = 0;
    out.witness.parent = {-1};
    out.witness.bags = {{}};
    return out;
  }
  // The subset table holds 2^m entries; cap it regardless of the limit knob.
  if (m > 24) throw SizeLimitError("elimination search supports at most 24 vertices");
  std::vector<int> nzpos(view.verts.size(), -1);
  for (int i = 0; i < m; ++i) nzpos[nz[i]] = i;
  std::vector<std::uint64_t> adj(m, 0);
  for (std::uint64_t e : view.edge_masks) {
    std::uint64_t em = 0;
    std::uint64_t t = e;
    while (t) {
      int v = std::countr_zero(t);
      t &= t - 1;
      em |= std::uint64_t{1} << nzpos[v];
    }
    t = em;
    while (t) {
      int i = std::countr_zero(t);
      t &= t - 1;
      adj[i] |= em & ~(std::uint64_t{1} << i);
    }
  }
  // Bag of eliminating v after the vertices in `done`: v plus every
  // not-yet-eliminated vertex reachable from v through `done`.
  auto bag_mask = [&](int v, std::uint64_t done) {
    std::uint64_t bag = std::uint64_t{1} << v;
    std::uint64_t visited = bag;
    std::vector<int> stack = {v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      std::uint64_t next = adj[u] & ~visited;
      while (next) {
        int w = std::countr_zero(next);
        next &= next - 1;
        visited |= std::uint64_t{1} << w;
        if (done >> w & 1) {
          stack.push_back(w);
        } else {
          bag |= std::uint64_t{1} << w;
        }
      }
    }
    return bag;
  };
  std::map<std::uint64_t, Rational> fmemo;
  auto bag_value = [&](std::uint64_t bag) -> Rational {
    auto it = fmemo.find(bag);
    if (it != fmemo.end()) return it->second;
    Rational val;
    if (kind == WidthKind::tw) {
      val = static_cast<long>(std::popcount(bag)) - 1;
    } else {
      std::uint64_t vm = 0;
      std::uint64_t t = bag;
      while (t) {
        int i = std::countr_zero(t);
        t &= t - 1;
        vm |= std::uint64_t{1} << nz[i];
      }
      val = kind == WidthKind::ghw ? Rational(oracle.rho(vm)) : oracle.rho_star(vm);
    }
    fmemo[bag] = val;
    return val;
  };
  std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  std::vector<Rational> dp(static_cast<size_t>(full) + 1);
  std::vector<signed char> choice(static_cast<size_t>(full) + 1, -1);
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    bool have = false;
    Rational best;
    std::uint64_t t = mask;
    while (t) {
      int v = std::countr_zero(t);
      t &= t - 1;
      std::uint64_t prev = mask & ~(std::uint64_t{1} << v);
      Rational cand = std::max(dp[prev], bag_value(bag_mask(v, prev)));
      if (!have || cand < best) {
        have = true;
        best = cand;
        choice[mask] = static_cast<signed char>(v);
      }
    }
    dp[mask] = best;
  }
  ExactWidth out;
  out.value = dp[full];
  std::vector<int> elim(m);
  std::uint64_t s = full;
  for (int pos = m - 1; pos >= 0; --pos) {
    int v = choice[s];
    elim[pos] = v;
    s &= ~(std::uint64_t{1} << v);
  }
  std::vector<int> elimpos(m);
  for (int i = 0; i < m; ++i) elimpos[elim[i]] = i;
  out.witness.parent.assign(m, -1);
  out.witness.bags.assign(m, {});
  std::uint64_t done = 0;
  for (int i = 0; i < m; ++i) {
    std::uint64_t bag = bag_mask(elim[i], done);
    done |= std::uint64_t{1} << elim[i];
    std::uint64_t t = bag;
    while (t) {
      int v = std::countr_zero(t);
      t &= t - 1;
      out.witness.bags[i].insert(view.verts[nz[v]]);
    }
    std::uint64_t rest = bag & ~(std::uint64_t{1} << elim[i]);
    if (rest) {
      int firstpos = m;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        firstpos = std::min(firstpos, elimpos[v]);
      }
      out.witness.parent[i] = firstpos;
    } else {
      out.witness.parent[i] = i == m - 1 ? -1 : i + 1;
    }
  }
  contract_subsumed_bags(out.witness);
  return out;
}

namespace {

// Normal-form hypertree search state shared by decide/build.
struct HwSearch {
  const HgView& view;
  int k;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::optional<std::uint64_t>> memo;

  std::uint64_t verts_of(std::uint64_t edge_set) const {
    std::uint64_t v = 0;
    std::uint64_t t = edge_set;
    while (t) {
      int e = std::countr_zero(t);
      t &= t - 1;
      v |= view.edge_masks[e];
    }
    return v;
  }

  std::vector<std::uint64_t> components(std::uint64_t region) const {
    std::vector<std::uint64_t> comps;
    std::uint64_t rest = region;
    while (rest) {
      std::uint64_t comp = std::uint64_t{1} << std::countr_zero(rest);
      while (true) {
        std::uint64_t grown = comp;
        for (std::uint64_t e : view.edge_masks) {
          if (e & grown) grown |= e & region;
        }
        if (grown == comp) break;
        comp = grown;
      }
      comps.push_back(comp);
      rest &= ~comp;
    }
    return comps;
  }

  std::uint64_t connector(std::uint64_t comp, std::uint64_t b) const {
    std::uint64_t acc = 0;
    for (std::uint64_t e : view.edge_masks) {
      if (e & comp) acc |= e;
    }
    return acc & b;
  }

  bool decide(std::uint64_t c, std::uint64_t conn) {
    auto key = std::make_pair(c, conn);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second.has_value();
    std::vector<int> cand;
    for (size_t e = 0; e < view.edge_masks.size(); ++e) {
      if (view.edge_masks[e] & (c | conn)) cand.push_back(static_cast<int>(e));
    }
    int nc = static_cast<int>(cand.size());
    for (int size = 1; size <= k && size <= nc; ++size) {
      std::vector<int> idx(size);
      for (int i = 0; i < size; ++i) idx[i] = i;
      while (true) {
        std::uint64_t smask = 0;
        for (int i : idx) smask |= std::uint64_t{1} << cand[i];
        std::uint64_t vs = verts_of(smask);
        if ((conn & ~vs) == 0 && (vs & c) != 0) {
          std::uint64_t b = vs & (c | conn);
          bool ok = true;
          for (std::uint64_t comp : components(c & ~b)) {
            if (!decide(comp, connector(comp, b))) {
              ok = false;
              break;
            }
          }
          if (ok) {
            memo[key] = smask;
            return true;
          }
        }
        int i = size - 1;
        while (i >= 0 && idx[i] == nc - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    memo[key] = std::nullopt;
    return false;
  }

  int build(std::uint64_t c, std::uint64_t conn, int parent, CoveredDecomposition& out) {
    std::uint64_t smask = *memo.at(std::make_pair(c, conn));
    std::uint64_t b = verts_of(smask) & (c | conn);
    int node = static_cast<int>(out.base.bags.size());
    out.base.parent.push_back(parent);
    out.base.bags.push_back(view.unmask(b));
    std::set<std::string> cover;
    std::uint64_t t = smask;
    while (t) {
      int e = std::countr_zero(t);
      t &= t - 1;
      cover.insert(view.edge_names[e]);
    }
    out.covers.push_back(std::move(cover));
    for (std::uint64_t comp : components(c & ~b)) {
      build(comp, connector(comp, b), node, out);
    }
    return node;
  }
};

}  // namespace

std::optional<CoveredDecomposition> exact_hw(const Hypergraph& h, int k,
                                             const SizeLimits& limits) {
  if (k < 1) throw std::invalid_argument("hw search needs k >= 1");
  if (static_cast<long>(h.vertices.size()) > limits.hw) {
    throw SizeLimitError("hw limit is " + std::to_string(limits.hw) + " vertices, got " +
                         std::to_string(h.vertices.size()));
  }
  HgView view(h);
  if (view.edge_masks.size() > 64) {
    throw SizeLimitError("hw search supports at most 64 edges");
  }
  std::uint64_t covered = 0;
  for (std::uint64_t e : view.edge_masks) covered |= e;
  if (covered == 0) {
    CoveredDecomposition out;
    out.base.parent = {-1};
    out.base.bags = {{}};
    out.covers = {{}};
    return out;
  }
  HwSearch search{view, k, {}};
  std::vector<std::uint64_t> comps = search.components(covered);
  for (std::uint64_t comp : comps) {
    if (!search.decide(comp, 0)) return std::nullopt;
  }
  CoveredDecomposition out;
  int root = -1;
  for (std::uint64_t comp : comps) {
    int r = search.build(comp, 0, root, out);
    if (root == -1) root = r;
  }
  return out;
}

long exact_hw_value(const Hypergraph& h, const SizeLimits& limits) {
  if (h.edges.empty()) return 0;
  std::set<std::string> nz;
  for (const auto& [name, set] : h.edges) nz.insert(set.begin(), set.end());
  long ub = integral_cover(h, nz).size();
  for (long k = 1; k < ub; ++k) {
    if (exact_hw(h, static_cast<int>(k), limits)) return k;
  }
  return ub;
}

std::pair<Rational, Rational> subw_bounds(const Hypergraph& h, const SizeLimits& limits) {
  if (h.edges.empty()) return {Rational(0), Rational(0)};
  long rank = 0;
  for (const auto& [name, set] : h.edges) rank = std::max(rank, static_cast<long>(set.size()));
  Rational tw = exact_width(h, WidthKind::tw, limits).value;
  Rational fhw = exact_width(h, WidthKind::fhw, limits).value;
  return {(tw + 1) / rank, fhw};
}

namespace {

TreeDecomposition prune_impl(const TreeDecomposition& td,
                             const std::vector<std::set<std::string>>* covers,
                             std::vector<std::set<std::string>>* covers_out) {
  int n = td.node_count();
  std::vector<int> newid(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (!td.bags[i].empty()) newid[i] = next++;
  }
  TreeDecomposition out;
  out.parent.assign(next, -1);
  out.bags.resize(next);
  if (covers_out) covers_out->resize(next);
  int first_top = -1;
  for (int i = 0; i < n; ++i) {
    if (newid[i] < 0) continue;
    out.bags[newid[i]] = td.bags[i];
    if (covers_out) (*covers_out)[newid[i]] = (*covers)[i];
    int p = td.parent[i];
    while (p >= 0 && newid[p] < 0) p = td.parent[p];
    if (p >= 0) {
      out.parent[newid[i]] = newid[p];
    } else if (first_top < 0) {
      first_top = newid[i];
    } else {
      out.parent[newid[i]] = first_top;
    }
  }
  return out;
}

}  // namespace

TreeDecomposition prune_empty_bags(const TreeDecomposition& td) {
  return prune_impl(td, nullptr, nullptr);
}

CoveredDecomposition prune_empty_bags(const CoveredDecomposition& d) {
  CoveredDecomposition out;
  out.base = prune_impl(d.base, &d.covers, &out.covers);
  return out;
}

namespace {

std::string serialize_impl(const TreeDecomposition& td,
                           const std::vector<std::set<std::string>>* covers,
                           const std::string& metric, const Rational& value) {
  std::vector<int> order = preorder(td);
  std::vector<int> id(td.node_count(), 0);
  for (size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<int>(i) + 1;
  std::ostringstream out;
  out << "s td " << td.node_count() << ' ' << metric << ' ' << rational_display(value) << '\n';
  for (int u : order) {
    out << "b " << id[u];
    for (const auto& v : td.bags[u]) out << ' ' << v;
    out << '\n';
  }
  if (covers) {
    for (int u : order) {
      out << "c " << id[u];
      for (const auto& e : (*covers)[u]) out << ' ' << e;
      out << '\n';
    }
  }
  for (int u : order) {
    if (td.parent[u] >= 0) out << "t " << id[td.parent[u]] << ' ' << id[u] << '\n';
  }
  return out.str();
}

}  // namespace

std::string serialize_td(const TreeDecomposition& td, const std::string& metric,
                         const Rational& value) {
  TreeDecomposition pruned = prune_empty_bags(td);
  return serialize_impl(pruned, nullptr, metric, value);
}

std::string serialize_td(const CoveredDecomposition& d, const std::string& metric,
                         const Rational& value) {
  CoveredDecomposition pruned = prune_empty_bags(d);
  return serialize_impl(pruned.base, &pruned.covers, metric, value);
}

ParsedTd parse_td(const std::string& text) {
  ParsedTd out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  bool saw_cover = false;
  std::vector<std::pair<int, int>> tree_lines;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "#") continue;
    if (tag == "s") {
      std::string td_word, metric, value;
      int count = 0;
      if (!(ls >> td_word >> count >> metric >> value) || td_word != "td" || count < 0) {
        throw fail("malformed header");
      }
      n = count;
      out.metric = metric;
      out.value = parse_rational(value);
      out.td.parent.assign(n, -1);
      out.td.bags.assign(n, {});
    } else if (tag == "b" || tag == "c") {
      if (n < 0) throw fail("node line before header");
      int id = 0;
      if (!(ls >> id) || id < 1 || id > n) throw fail("node id out of range");
      std::set<std::string> names;
      std::string name;
      while (ls >> name) names.insert(name);
      if (tag == "b") {
        out.td.bags[id - 1] = std::move(names);
      } else {
        if (!saw_cover) {
          saw_cover = true;
          out.covers.emplace();
          out.covers->assign(n, {});
        }
        (*out.covers)[id - 1] = std::move(names);
      }
    } else if (tag == "t") {
      if (n < 0) throw fail("tree line before header");
      int p = 0, c = 0;
      if (!(ls >> p >> c) || p < 1 || p > n || c < 1 || c > n || p == c) {
        throw fail("malformed tree line");
      }
      tree_lines.emplace_back(p - 1, c - 1);
    } else {
      throw fail("unknown line tag: " + tag);
    }
  }
  if (n < 0) throw ParseError("missing decomposition header");
  for (auto [p, c] : tree_lines) {
    if (out.td.parent[c] != -1) throw ParseError("node has two parents");
    out.td.parent[c] = p;
  }
  if (n > 0) check_tree_shape(out.td);
  return out;
}

}  // namespace semwidth
