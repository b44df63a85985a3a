#include "semwidth/check.hpp"

#include "semwidth/covers.hpp"
#include "semwidth/decomp.hpp"
#include "semwidth/errors.hpp"
#include "semwidth/gen.hpp"
#include "semwidth/hom.hpp"
#include "semwidth/model.hpp"
#include "semwidth/reductions.hpp"
#include "semwidth/semantic.hpp"
#include "semwidth/solver.hpp"
#include "semwidth/ucq.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace semwidth {

namespace {

std::uint64_t item_seed(std::uint64_t seed, int i) {
  return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i + 1);
}

void expect(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

struct Suite {
  CheckReport report;

  explicit Suite(std::string name) { report.suite = std::move(name); }

  void item(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      report.failures.push_back(label + ": " + ex.what());
    }
    ++report.checked;
  }
};

Hypergraph triangle_hypergraph() {
  return hypergraph_from_edges(
      {{"e1", {"a", "b"}}, {"e2", {"b", "c"}}, {"e3", {"a", "c"}}});
}

Hypergraph single_edge3_hypergraph() {
  return hypergraph_from_edges({{"e1", {"a", "b", "c"}}});
}

Structure k2_structure() {
  return structure_from_facts({{"E", {"c0", "c1"}}, {"E", {"c1", "c0"}}});
}

// One exact-width call per kind with its witness revalidated.
Rational checked_width(const Hypergraph& h, WidthKind kind) {
  ExactWidth ew = exact_width(h, kind);
  expect(validate_td(h, ew.witness).ok(), "witness fails validation\n" + serialize_hypergraph(h));
  expect(width_of(h, ew.witness, kind) == ew.value,
         "witness width disagrees with reported value\n" + serialize_hypergraph(h));
  return ew.value;
}

std::set<std::string> covered_vertices(const Hypergraph& h) {
  std::set<std::string> nz;
  for (const auto& [name, set] : h.edges) nz.insert(set.begin(), set.end());
  return nz;
}

}  // namespace

CheckReport check_hierarchy(std::uint64_t seed, int count) {
  Suite suite("hierarchy");
  suite.item("triangle", [] {
    Hypergraph h = triangle_hypergraph();
    expect(checked_width(h, WidthKind::tw) == 2, "triangle tw");
    expect(checked_width(h, WidthKind::ghw) == 2, "triangle ghw");
    expect(checked_width(h, WidthKind::fhw) == Rational(3) / 2, "triangle fhw");
    expect(exact_hw_value(h) == 2, "triangle hw");
    auto [lo, hi] = subw_bounds(h);
    expect(lo == Rational(3) / 2 && hi == Rational(3) / 2, "triangle subw bounds");
  });
  suite.item("single-3-edge", [] {
    Hypergraph h = single_edge3_hypergraph();
    expect(checked_width(h, WidthKind::tw) == 2, "edge tw");
    expect(checked_width(h, WidthKind::ghw) == 1, "edge ghw");
    expect(checked_width(h, WidthKind::fhw) == 1, "edge fhw");
    expect(exact_hw_value(h) == 1, "edge hw");
    auto [lo, hi] = subw_bounds(h);
    expect(lo == 1 && hi == 1, "edge subw bounds");
  });
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = item_seed(seed, i);
    suite.item("seed " + std::to_string(s), [s] {
      std::mt19937_64 rng(s);
      int v = 2 + static_cast<int>(rng() % 7);
      int e = 1 + static_cast<int>(rng() % (v + 2));
      Hypergraph h = gen_random_hypergraph(v, e, rng());
      std::string dump = serialize_hypergraph(h);
      Rational tw = checked_width(h, WidthKind::tw);
      Rational ghw = checked_width(h, WidthKind::ghw);
      Rational fhw = checked_width(h, WidthKind::fhw);
      long hw = exact_hw_value(h);
      auto hd = exact_hw(h, static_cast<int>(hw));
      expect(hd.has_value(), "hw witness missing\n" + dump);
      expect(scv_list(h, *hd).empty(), "hw witness has violations\n" + dump);
      expect(cover_width_of(*hd) <= hw, "hw witness too wide\n" + dump);
      if (hw > 1) expect(!exact_hw(h, static_cast<int>(hw) - 1), "hw not minimal\n" + dump);
      auto [lo, hi] = subw_bounds(h);
      expect(fhw <= ghw, "fhw > ghw\n" + dump);
      expect(ghw <= Rational(hw), "ghw > hw\n" + dump);
      expect(Rational(hw) <= tw + 1, "hw > tw+1\n" + dump);
      expect(lo <= fhw && hi == fhw, "subw bounds out of place\n" + dump);
      expect(lo <= hi, "crossed subw bounds\n" + dump);
    });
  }
  return suite.report;
}

CheckReport check_core_minimality(std::uint64_t seed, int count) {
  Suite suite("core-minimality");
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = item_seed(seed, i);
    suite.item("seed " + std::to_string(s), [s] {
      RandomStructureParams p;
      p.max_elements = 5;
      p.density_percent = 22;
      Structure a = gen_random_structure(s, p);
      std::string dump = serialize_structure(a);
      CoreResult cr = compute_core(a);
      expect(hom_equivalent(a, cr.core), "core not equivalent\n" + dump);
      expect(is_homomorphism(a, a, cr.retraction), "retraction is not an endomorphism\n" + dump);
      for (const auto& x : cr.core.domain) {
        expect(cr.retraction.at(x) == x, "retraction moves a core element\n" + dump);
      }
      expect(compute_core(cr.core).core == cr.core, "core not a fixpoint\n" + dump);
      Hypergraph h = hypergraph_of(a);
      std::set<std::string> nz = covered_vertices(h);
      Rational plain_rho_star = nz.empty() ? Rational(0) : fractional_cover(h, nz).total;
      SemanticWidth sw_rho = semantic_width(a, SemanticKind::rho_star);
      SemanticWidth sw_fhw = semantic_width(a, SemanticKind::fhw);
      SemanticWidth sw_ghw = semantic_width(a, SemanticKind::ghw);
      expect(sw_rho.lower <= plain_rho_star, "semantic rho* above plain\n" + dump);
      expect(sw_fhw.lower <= exact_width(h, WidthKind::fhw).value,
             "semantic fhw above plain\n" + dump);
      expect(sw_ghw.lower <= exact_width(h, WidthKind::ghw).value,
             "semantic ghw above plain\n" + dump);
      SemanticHw shw = semantic_hw(a);
      expect(Rational(shw.value) == sw_ghw.lower, "semantic hw differs from ghw of core\n" + dump);
      expect(hom_equivalent(a, shw.structure), "hw witness not equivalent\n" + dump);
      expect(scv_list(hypergraph_of(shw.structure), shw.decomposition).empty(),
             "hw witness has violations\n" + dump);
      expect(cover_width_of(shw.decomposition) == shw.value,
             "hw witness width mismatch\n" + dump);
      // Width is a property of the equivalence class: duplicating an element
      // must change nothing.
      if (!a.domain.empty()) {
        Structure a2 = a;
        std::string src = a.domain.front();
        std::string dup = "xdup";
        a2.domain.insert(std::upper_bound(a2.domain.begin(), a2.domain.end(), dup), dup);
        for (auto& [rel, facts] : a.facts) {
          for (const auto& t : facts) {
            Fact copy = t;
            bool touched = false;
            for (auto& x : copy) {
              if (x == src) {
                x = dup;
                touched = true;
              }
            }
            if (touched) a2.facts[rel].insert(copy);
          }
        }
        validate_structure(a2);
        expect(hom_equivalent(a, a2), "duplicate-element variant not equivalent\n" + dump);
        SemanticWidth sw2 = semantic_width(a2, SemanticKind::ghw);
        expect(sw2.lower == sw_ghw.lower, "semantic ghw not class-invariant\n" + dump);
        expect(is_isomorphic(sw2.core, sw_ghw.core), "cores of equivalents differ\n" + dump);
      }
    });
  }
  return suite.report;
}

CheckReport check_duality(std::uint64_t seed, int count) {
  Suite suite("duality");
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = item_seed(seed, i);
    suite.item("seed " + std::to_string(s), [s] {
      std::mt19937_64 rng(s);
      int v = 2 + static_cast<int>(rng() % 6);
      int e = 1 + static_cast<int>(rng() % (v + 2));
      Hypergraph h = reduce(gen_random_hypergraph(v, e, rng()));
      std::string dump = serialize_hypergraph(h);
      expect(is_reduced(h), "reduce output not reduced\n" + dump);
      Hypergraph d = dual(h);
      expect(is_reduced(d), "dual not reduced\n" + dump);
      expect(dual(d) == h, "dual not an involution\n" + dump);
      GapReport g = gap_report(h);
      Transversality td = transversality(d);
      expect(g.rho == td.tau, "rho differs from tau of dual\n" + dump);
      expect(g.rho_star == td.tau_star, "rho* differs from tau* of dual\n" + dump);
      VcResult vch = vc_dimension(h);
      VcResult vcd = vc_dimension(d);
      expect(vcd.vc < (1L << (vch.vc + 1)), "dual vc out of range\n" + dump);
      double cigap = rational_approx(g.cigap);
      double bound =
          std::max(1.0, std::exp2(vch.vc + 2) * std::log2(11.0 * rational_approx(g.rho_star)));
      expect(cigap <= bound + 1e-6, "cover gap above the vc bound\n" + dump);
      long hw = exact_hw_value(h);
      Rational ghw = exact_width(h, WidthKind::ghw).value;
      expect(Rational(hw) <= 3 * ghw + 1, "hw above 3*ghw+1\n" + dump);
    });
  }
  return suite.report;
}

CheckReport check_scv_repair(std::uint64_t seed, int count) {
  Suite suite("scv-repair");
  int attempts = 0;
  int produced = 0;
  int next = 0;
  while (produced < count && attempts < 200 * count) {
    std::uint64_t s = item_seed(seed, next++);
    ++attempts;
    RandomStructureParams p;
    p.min_elements = 3;
    p.max_elements = 5;
    p.density_percent = 24;
    Structure a = gen_random_structure(s, p);
    CoveredDecomposition d;
    std::vector<ScvRecord> records;
    try {
      d = gen_sloppy_ghd(a, s ^ 0x5bf03635);
      records = scv_list(hypergraph_of(a), d);
    } catch (const std::exception&) {
      continue;
    }
    if (records.empty()) continue;
    ++produced;
    size_t initial = records.size();
    suite.item("seed " + std::to_string(s), [&a, &d, initial] {
      std::string dump = serialize_structure(a);
      long width = cover_width_of(d);
      ScvRepairResult r = scv_repair(a, d);
      expect(scv_list(hypergraph_of(r.structure), r.decomposition).empty(),
             "repair left violations\n" + dump);
      expect(cover_width_of(r.decomposition) == width, "repair changed the width\n" + dump);
      expect(hom_equivalent(a, r.structure), "repair broke equivalence\n" + dump);
      expect(r.repairs >= 1 && r.repairs <= static_cast<int>(initial),
             "repair count out of range\n" + dump);
      expect(structure_size(r.structure) > structure_size(a),
             "repair did not grow the structure\n" + dump);
    });
  }
  if (produced < count) {
    suite.report.failures.push_back("generator produced only " + std::to_string(produced) +
                                    " violating decompositions");
  }
  return suite.report;
}

CheckReport check_redh(std::uint64_t seed, int count) {
  Suite suite("redh");
  suite.item("worked-edge", [] {
    Structure c = structure_from_facts({{"E", {"u", "v"}}});
    Structure d = structure_from_facts({{"E", {"0", "1"}}});
    Structure a = structure_from_facts({{"R", {"u", "v"}}});
    auto maps = satisfying_assignments(c, d, {"u", "v"});
    expect(maps.size() == 1 && maps[0].at("u") == "0" && maps[0].at("v") == "1",
           "unique satisfying assignment expected");
    Instance inst = redh_reduce(c, d, a);
    expect(inst.right.facts.at("R") == std::set<Fact>{{"u@0", "v@1"}},
           "reduced fact table wrong");
    expect(solve_bruteforce(c, d).first && solve_bruteforce(inst.left, inst.right).first,
           "both sides should be solvable");
  });
  suite.item("worked-bidirected", [] {
    Structure c = structure_from_facts({{"E", {"u", "v"}}, {"E", {"v", "u"}}});
    Structure d = structure_from_facts({{"E", {"0", "1"}}});
    expect(satisfying_assignments(c, d, {"u", "v"}).empty(),
           "no assignment satisfies both tuples");
    Structure dloop = structure_from_facts({{"E", {"0", "0"}}});
    auto maps = satisfying_assignments(c, dloop, {"u", "v"});
    expect(maps.size() == 1 && maps[0].at("u") == "0" && maps[0].at("v") == "0",
           "loop admits the constant assignment");
  });
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = item_seed(seed, i);
    suite.item("seed " + std::to_string(s), [s, i] {
      std::mt19937_64 rng(s);
      RandomStructureParams p;
      p.min_elements = 2;
      p.max_elements = 4;
      p.max_relations = 2;
      p.density_percent = 30;
      Structure c = gen_random_structure(rng(), p);
      int delems = 1 + static_cast<int>(rng() % 3);
      Structure d = gen_random_structure_over(c.signature, delems, 40, rng());
      std::string dump = serialize_structure(c) + "---\n" + serialize_structure(d);
      Structure a;
      Mapping ident;
      if (i % 2 == 0) {
        a = c;
        a.signature.relations.clear();
        a.facts.clear();
        for (const auto& [rel, ar] : c.signature.relations) {
          a.signature.relations.emplace_back("S" + rel, ar);
        }
        std::sort(a.signature.relations.begin(), a.signature.relations.end());
        for (const auto& [rel, facts] : c.facts) a.facts["S" + rel] = facts;
        for (const auto& x : a.domain) ident[x] = x;
      } else {
        a.signature = c.signature;
        for (const auto& x : c.domain) {
          a.domain.push_back("p" + x);
          ident["p" + x] = x;
        }
        std::sort(a.domain.begin(), a.domain.end());
        for (const auto& [rel, facts] : c.facts) {
          for (const auto& t : facts) {
            Fact copy = t;
            for (auto& x : copy) x = "p" + x;
            a.facts[rel].insert(copy);
          }
        }
      }
      validate_structure(a);
      Instance inst = redh_reduce(c, d, a, ident);
      auto direct = solve_bruteforce(c, d);
      auto reduced = solve_bruteforce(inst.left, inst.right);
      expect(direct.first == reduced.first, "solvability not preserved\n" + dump);
      if (reduced.first) {
        Mapping h = redh_extract(c, d, ident, *reduced.second);
        expect(is_homomorphism(c, d, h), "extracted witness invalid\n" + dump);
      }
    });
  }
  return suite.report;
}

CheckReport check_ucq(std::uint64_t seed, int count) {
  Suite suite("ucq");
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = item_seed(seed, i);
    suite.item("seed " + std::to_string(s), [s] {
      std::mt19937_64 rng(s);
      RandomStructureParams p;
      p.min_elements = 2;
      p.max_elements = 4;
      p.max_relations = 2;
      p.density_percent = 28;
      Ucq u;
      u.disjuncts.push_back(gen_random_structure(rng(), p));
      // Copy: growing u.disjuncts below would invalidate a reference.
      const Signature sig = u.disjuncts.front().signature;
      int extra = static_cast<int>(rng() % 3);
      for (int j = 0; j < extra; ++j) {
        u.disjuncts.push_back(
            gen_random_structure_over(sig, 2 + static_cast<int>(rng() % 3), 28, rng()));
      }
      Structure b = gen_random_structure_over(sig, 1 + static_cast<int>(rng() % 3), 45, rng());
      std::string dump = serialize_ucq(u) + "---data---\n" + serialize_structure(b);
      Ucq nr = make_nonredundant(u);
      for (size_t x = 0; x < nr.disjuncts.size(); ++x) {
        for (size_t y = 0; y < nr.disjuncts.size(); ++y) {
          if (x != y) {
            expect(!is_contained(nr.disjuncts[x], nr.disjuncts[y]),
                   "nonredundant form is not an antichain\n" + dump);
          }
        }
      }
      expect(ucq_equivalent(u, nr), "nr not equivalent to the query\n" + dump);
      bool expected = false;
      for (const auto& disjunct : u.disjuncts) {
        expected = expected || solve_bruteforce(disjunct, b).first;
      }
      expect(solve_ucq(u, b) == expected, "query answer differs from oracle\n" + dump);
      // Appending a disjunct contained in the first one reformulates the
      // query without changing it.
      Ucq u2 = u;
      Structure padded = u.disjuncts.front();
      std::string fresh = "z9";
      padded.domain.insert(std::upper_bound(padded.domain.begin(), padded.domain.end(), fresh),
                           fresh);
      const auto& [rel, ar] = sig.relations.front();
      padded.facts[rel].insert(Fact(static_cast<size_t>(ar), fresh));
      validate_structure(padded);
      u2.disjuncts.push_back(padded);
      expect(ucq_equivalent(u, u2), "contained disjunct changed the query\n" + dump);
      auto b1 = ucq_semantic_subw_bounds(u);
      auto b2 = ucq_semantic_subw_bounds(u2);
      expect(b1 == b2, "bounds not invariant under reformulation\n" + dump);
    });
  }
  return suite.report;
}

CheckReport check_solver_agreement(std::uint64_t seed, int count) {
  Suite suite("solver-agreement");
  Structure k2 = k2_structure();
  for (int n = 1; n <= 3; ++n) {
    suite.item("grid n=" + std::to_string(n), [n, &k2] {
      Instance inst = gen_grid_instance(n, k2);
      auto brute = solve_bruteforce(inst.left, inst.right);
      expect(brute.first, "grids are 2-colorable");
      SolveStats stats;
      expect(solve_decomposed(inst.left, inst.right, true, SizeLimits{}, &stats),
             "guided solver disagrees on the grid");
      expect(solve_decomposed(inst.left, inst.right, false), "plain guided solve failed");
      expect(stats.semijoin_monotone, "semijoin grew a relation");
      long bd = static_cast<long>(inst.right.domain.size());
      expect(stats.max_bag_rows <= bd * bd, "cored grid bag larger than |B|^2");
    });
  }
  suite.item("directed-3-cycle", [&k2] {
    Structure cyc = structure_from_facts(
        {{"E", {"t1", "t2"}}, {"E", {"t2", "t3"}}, {"E", {"t3", "t1"}}});
    expect(!solve_bruteforce(cyc, k2).first, "odd cycle into an edge");
    expect(!solve_decomposed(cyc, k2, true), "guided solver on odd cycle");
    expect(!solve_decomposed(cyc, k2, false), "plain guided solver on odd cycle");
    expect(solve_decomposed(cyc, cyc, true), "cycle into itself");
  });
  suite.item("loop", [&k2] {
    Structure loop = structure_from_facts({{"E", {"l1", "l1"}}});
    expect(!solve_bruteforce(loop, k2).first, "loop needs a loop");
    expect(!solve_decomposed(loop, k2, true), "guided loop vs edge");
    expect(solve_decomposed(loop, loop, false), "loop into itself");
  });
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = item_seed(seed, i);
    suite.item("seed " + std::to_string(s), [s] {
      std::mt19937_64 rng(s);
      RandomStructureParams p;
      p.max_relations = 2;
      p.density_percent = 25;
      Structure a = gen_random_structure(rng(), p);
      Structure b = gen_random_structure_over(a.signature, 1 + static_cast<int>(rng() % 4), 40,
                                              rng());
      std::string dump = serialize_structure(a) + "---\n" + serialize_structure(b);
      bool brute = solve_bruteforce(a, b).first;
      SolveStats stats;
      expect(solve_decomposed(a, b, false) == brute, "plain guided solve disagrees\n" + dump);
      expect(solve_decomposed(a, b, true, SizeLimits{}, &stats) == brute,
             "cored guided solve disagrees\n" + dump);
      expect(stats.semijoin_monotone, "semijoin grew a relation\n" + dump);
    });
  }
  return suite.report;
}

CheckReport check_pushforward(std::uint64_t seed, int count) {
  Suite suite("pushforward");
  for (int i = 0; i < count; ++i) {
    std::uint64_t s = item_seed(seed, i);
    suite.item("seed " + std::to_string(s), [s] {
      std::mt19937_64 rng(s);
      int v = 2 + static_cast<int>(rng() % 5);
      int e = 1 + static_cast<int>(rng() % 6);
      Hypergraph h = gen_random_hypergraph(v, e, rng());
      int copies = 1 + static_cast<int>(rng() % 2);
      std::vector<std::pair<std::string, std::set<std::string>>> gedges;
      Mapping f;
      const char* prefixes[] = {"s", "t"};
      for (int cp = 0; cp < copies; ++cp) {
        for (const auto& x : h.vertices) f[prefixes[cp] + x] = x;
        for (const auto& [name, set] : h.edges) {
          std::set<std::string> renamed;
          for (const auto& x : set) renamed.insert(prefixes[cp] + x);
          gedges.emplace_back(prefixes[cp] + name, std::move(renamed));
        }
      }
      int dups = static_cast<int>(rng() % 3);
      for (int dj = 0; dj < dups; ++dj) {
        auto src = gedges[rng() % h.edges.size()];
        gedges.emplace_back("dup" + std::to_string(dj) + "_" + src.first, src.second);
      }
      Hypergraph g = hypergraph_from_edges(gedges);
      std::set<std::string> x_set;
      for (const auto& vtx : covered_vertices(g)) {
        if (rng() % 2) x_set.insert(vtx);
      }
      std::string dump = serialize_hypergraph(g) + "---onto---\n" + serialize_hypergraph(h);
      FractionalCover x = fractional_cover(g, x_set);
      FractionalCover pushed = pushforward_cover(g, h, f, x);
      expect(pushed.total == x.total, "pushforward changed the total weight\n" + dump);
      std::set<std::string> image;
      for (const auto& vtx : x_set) image.insert(f.at(vtx));
      for (const auto& vtx : image) {
        Rational incident = 0;
        for (const auto& [name, set] : h.edges) {
          if (set.count(vtx)) incident += pushed.weights.at(name);
        }
        expect(incident >= 1, "image vertex " + vtx + " left uncovered\n" + dump);
      }
    });
  }
  return suite.report;
}

std::string format_report(const CheckReport& r) {
  std::ostringstream out;
  out << r.suite << ": " << r.checked << " checked, " << r.failures.size() << " failures\n";
  for (const auto& f : r.failures) out << "FAIL " << f << "\n";
  return out.str();
}

}  // namespace semwidth
