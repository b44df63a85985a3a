#include <doctest.h>

#include "oracles.hpp"
#include "semwidth/decomp.hpp"
#include "semwidth/errors.hpp"
#include "semwidth/gen.hpp"
#include "semwidth/model.hpp"

#include <random>

using namespace semwidth;

namespace {

Hypergraph triangle() { return parse_hypergraph("e1(a,b).\ne2(b,c).\ne3(a,c).\n"); }
Hypergraph edge3() { return parse_hypergraph("e1(a,b,c).\n"); }
Hypergraph path2() { return parse_hypergraph("e1(a,b).\ne2(b,c).\n"); }
Hypergraph square() { return parse_hypergraph("e1(a,b).\ne2(b,c).\ne3(c,d).\ne4(a,d).\n"); }

TreeDecomposition path_td() {
  TreeDecomposition td;
  td.parent = {-1, 0};
  td.bags = {{"a", "b"}, {"b", "c"}};
  return td;
}

}  // namespace

TEST_CASE("validate_td reports exactly what is broken") {
  CHECK(validate_td(path2(), path_td()).ok());

  TreeDecomposition missing;
  missing.parent = {-1, 0};
  missing.bags = {{"a", "b"}, {"c"}};
  TdValidation v = validate_td(path2(), missing);
  CHECK(v.uncovered_edges == std::vector<std::string>{"e2"});
  CHECK(v.disconnected_vertices.empty());

  TreeDecomposition split;
  split.parent = {-1, 0, 1};
  split.bags = {{"a"}, {"b"}, {"a", "c"}};
  TdValidation w = validate_td(path2(), split);
  CHECK(w.uncovered_edges == std::vector<std::string>{"e1", "e2"});
  CHECK(w.disconnected_vertices == std::vector<std::string>{"a"});

  TreeDecomposition stranger = path_td();
  stranger.bags[0].insert("zz");
  CHECK_THROWS_AS(validate_td(path2(), stranger), UnknownVertexError);

  TreeDecomposition malformed;
  malformed.parent = {-1};
  malformed.bags = {{"a"}, {"b"}};
  CHECK_THROWS_AS(validate_td(path2(), malformed), InvalidDecompositionError);

  TreeDecomposition cyclic;
  cyclic.parent = {1, 0};
  cyclic.bags = {{"a", "b"}, {"b", "c"}};
  CHECK_THROWS_AS(validate_td(path2(), cyclic), InvalidDecompositionError);
}

TEST_CASE("special condition violations name the node, edge and leak") {
  // Scopes E(a,b), F(b,c); the root's cover edge a_b leaks b below.
  Hypergraph h = hypergraph_of(parse_structure("E(a,b).\nF(b,c).\n"));
  CoveredDecomposition d;
  d.base.parent = {-1, 0, 1};
  d.base.bags = {{"a"}, {"a", "b"}, {"b", "c"}};
  d.covers = {{"a_b"}, {"a_b"}, {"b_c"}};

  std::vector<ScvRecord> records = scv_list(h, d);
  REQUIRE(records.size() == 1);
  CHECK(records[0].node == 0);
  CHECK(records[0].edge == "a_b");
  CHECK(records[0].leaked == std::set<std::string>{"b"});

  CoveredDecomposition clean = d;
  clean.base.bags[0] = {"a", "b"};
  CHECK(scv_list(h, clean).empty());

  CoveredDecomposition uncovering = d;
  uncovering.covers[2] = {"a_b"};
  CHECK_THROWS_AS(scv_list(h, uncovering), InvalidDecompositionError);
  CoveredDecomposition unknown = d;
  unknown.covers[0] = {"nope"};
  CHECK_THROWS_AS(scv_list(h, unknown), InvalidDecompositionError);
}

TEST_CASE("width_of evaluates the three bag metrics") {
  TreeDecomposition one;
  one.parent = {-1};
  one.bags = {{"a", "b", "c"}};
  CHECK(width_of(triangle(), one, WidthKind::tw) == 2);
  CHECK(width_of(triangle(), one, WidthKind::ghw) == 2);
  CHECK(width_of(triangle(), one, WidthKind::fhw) == Rational(3) / 2);

  CHECK(width_of(path2(), path_td(), WidthKind::tw) == 1);
  CHECK(width_of(path2(), path_td(), WidthKind::ghw) == 1);
  CHECK(width_of(path2(), path_td(), WidthKind::fhw) == 1);
}

TEST_CASE("exact widths of the worked hypergraphs") {
  CHECK(exact_width(triangle(), WidthKind::tw).value == 2);
  CHECK(exact_width(triangle(), WidthKind::ghw).value == 2);
  CHECK(exact_width(triangle(), WidthKind::fhw).value == Rational(3) / 2);

  CHECK(exact_width(edge3(), WidthKind::tw).value == 2);
  CHECK(exact_width(edge3(), WidthKind::ghw).value == 1);
  CHECK(exact_width(edge3(), WidthKind::fhw).value == 1);

  CHECK(exact_width(square(), WidthKind::tw).value == 2);
  CHECK(exact_width(square(), WidthKind::ghw).value == 2);
  CHECK(exact_width(square(), WidthKind::fhw).value == 2);

  ExactWidth w = exact_width(triangle(), WidthKind::fhw);
  CHECK(validate_td(triangle(), w.witness).ok());
  CHECK(width_of(triangle(), w.witness, WidthKind::fhw) == w.value);
}

TEST_CASE("exact widths match the all-decompositions oracle on small pools") {
  std::mt19937_64 rng(6061);
  for (int i = 0; i < 20; ++i) {
    Hypergraph h = gen_random_hypergraph(2 + static_cast<int>(rng() % 4),
                                         1 + static_cast<int>(rng() % 5), rng());
    ExactWidth tw = exact_width(h, WidthKind::tw);
    ExactWidth ghw = exact_width(h, WidthKind::ghw);
    ExactWidth fhw = exact_width(h, WidthKind::fhw);
    CHECK(tw.value == oracles::min_width_all_tds(h, 0));
    CHECK(ghw.value == oracles::min_width_all_tds(h, 1));
    CHECK(fhw.value == oracles::min_width_all_tds(h, 2));
    CHECK(validate_td(h, tw.witness).ok());
    CHECK(width_of(h, tw.witness, WidthKind::tw) == tw.value);
    CHECK(validate_td(h, ghw.witness).ok());
    CHECK(width_of(h, ghw.witness, WidthKind::ghw) == ghw.value);
    CHECK(validate_td(h, fhw.witness).ok());
    CHECK(width_of(h, fhw.witness, WidthKind::fhw) == fhw.value);
  }
}

TEST_CASE("edgeless hypergraphs have width zero") {
  Hypergraph h;
  h.vertices = {"a", "b"};
  ExactWidth w = exact_width(h, WidthKind::ghw);
  CHECK(w.value == 0);
  CHECK(exact_hw_value(h) == 0);
  CHECK(subw_bounds(h) == std::pair<Rational, Rational>{0, 0});
}

TEST_CASE("hypertree width search decides k exactly") {
  CHECK(exact_hw(triangle(), 2).has_value());
  CHECK_FALSE(exact_hw(triangle(), 1).has_value());
  CHECK(exact_hw_value(triangle()) == 2);
  CHECK(exact_hw_value(edge3()) == 1);
  CHECK(exact_hw_value(square()) == 2);
  CHECK_THROWS_AS(exact_hw(triangle(), 0), std::invalid_argument);

  CoveredDecomposition d = *exact_hw(triangle(), 2);
  CHECK(validate_td(triangle(), d.base).ok());
  CHECK(cover_width_of(d) <= 2);
  CHECK(scv_list(triangle(), d).empty());
}

TEST_CASE("hypertree width is sandwiched by ghw and single-node covers") {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 20; ++i) {
    Hypergraph h = gen_random_hypergraph(2 + static_cast<int>(rng() % 5),
                                         1 + static_cast<int>(rng() % 6), rng());
    long hw = exact_hw_value(h);
    Rational ghw = exact_width(h, WidthKind::ghw).value;
    CHECK(ghw <= hw);
    std::set<std::string> covered;
    for (const auto& [name, set] : h.edges) covered.insert(set.begin(), set.end());
    long rho = covered.empty() ? 0 : oracles::min_integral_cover(h, covered);
    CHECK(hw <= rho);
    if (hw >= 1) {
      CoveredDecomposition d = *exact_hw(h, static_cast<int>(hw));
      CHECK(scv_list(h, d).empty());
      CHECK(cover_width_of(d) <= hw);
    }
  }
}

TEST_CASE("submodular width bounds of the worked hypergraphs") {
  CHECK(subw_bounds(edge3()) == std::pair<Rational, Rational>{1, 1});
  CHECK(subw_bounds(triangle()) ==
        std::pair<Rational, Rational>{Rational(3) / 2, Rational(3) / 2});
  CHECK(subw_bounds(square()) == std::pair<Rational, Rational>{Rational(3) / 2, 2});

  Structure k2 = parse_structure("E(c0,c1).\nE(c1,c0).\n");
  Hypergraph grid3 = hypergraph_of(gen_grid_instance(3, k2).left);
  auto [lo, hi] = subw_bounds(grid3);
  CHECK(lo == 2);
  CHECK(lo <= hi);
  CHECK(hi == exact_width(grid3, WidthKind::fhw).value);
}

TEST_CASE("generalized hypertree width one characterizes acyclic graphs") {
  std::mt19937_64 rng(515);
  for (int i = 0; i < 40; ++i) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::set<std::set<std::string>> sets;
    int m = 1 + static_cast<int>(rng() % 7);
    for (int j = 0; j < m; ++j) {
      std::string u = "v" + std::to_string(rng() % n);
      std::string v = "v" + std::to_string(rng() % n);
      if (u == v) continue;
      sets.insert({u, v});
    }
    if (sets.empty()) continue;
    std::vector<std::pair<std::string, std::set<std::string>>> edges;
    int id = 0;
    for (const auto& s : sets) edges.emplace_back("e" + std::to_string(id++), s);
    Hypergraph h = hypergraph_from_edges(edges);
    bool acyclic = oracles::graph_acyclic(h);
    CHECK((exact_width(h, WidthKind::ghw).value == 1) == acyclic);
    CHECK((exact_hw_value(h) == 1) == acyclic);
  }
}

TEST_CASE("preorder visits the root first and children in id order") {
  TreeDecomposition td;
  td.parent = {1, -1, 1, 0};
  td.bags = {{}, {}, {}, {}};
  CHECK(preorder(td) == std::vector<int>{1, 0, 3, 2});
  CHECK(td.root() == 1);
  CHECK(preorder(TreeDecomposition{}).empty());
}

TEST_CASE("pruning removes empty bags and reattaches children") {
  TreeDecomposition td;
  td.parent = {-1, 0, 1};
  td.bags = {{"a", "b"}, {}, {"b", "c"}};
  TreeDecomposition p = prune_empty_bags(td);
  CHECK(p.parent == std::vector<int>{-1, 0});
  CHECK(p.bags == std::vector<std::set<std::string>>{{"a", "b"}, {"b", "c"}});

  CoveredDecomposition d;
  d.base = td;
  d.covers = {{"e1"}, {}, {"e2"}};
  CoveredDecomposition q = prune_empty_bags(d);
  CHECK(q.base.parent == std::vector<int>{-1, 0});
  CHECK(q.covers == std::vector<std::set<std::string>>{{"e1"}, {"e2"}});
}

TEST_CASE("decomposition files round trip") {
  std::string text = serialize_td(path_td(), "tw", 1);
  CHECK(text == "s td 2 tw 1\nb 1 a b\nb 2 b c\nt 1 2\n");
  ParsedTd back = parse_td(text);
  CHECK(back.td.bags == path_td().bags);
  CHECK(back.td.parent == path_td().parent);
  CHECK(back.metric == "tw");
  CHECK(back.value == 1);
  CHECK_FALSE(back.covers.has_value());

  CoveredDecomposition d = *exact_hw(triangle(), 2);
  std::string covered = serialize_td(d, "hw", 2);
  ParsedTd again = parse_td(covered);
  REQUIRE(again.covers.has_value());
  CHECK(scv_list(triangle(), CoveredDecomposition{again.td, *again.covers}).empty());

  TreeDecomposition empty_bag;
  empty_bag.parent = {-1};
  empty_bag.bags = {{}};
  std::string zero = serialize_td(empty_bag, "fhw", Rational(3) / 2);
  CHECK(zero == "s td 0 fhw 3/2\n");
  ParsedTd z = parse_td(zero);
  CHECK(z.td.node_count() == 0);
  CHECK(z.value == Rational(3) / 2);
}

TEST_CASE("malformed decomposition files are rejected") {
  CHECK_THROWS_AS(parse_td("b 1 a\n"), ParseError);
  CHECK_THROWS_AS(parse_td("s td x tw 1\n"), ParseError);
  CHECK_THROWS_AS(parse_td("s td 1 tw 1\nb 2 a\n"), ParseError);
  CHECK_THROWS_AS(parse_td("s td 2 tw 1\nb 1 a\nb 2 b\nt 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_td("s td 1 tw 1\nq 1\n"), ParseError);
  CHECK_THROWS_AS(parse_td(""), ParseError);
  // Two parents for one child.
  CHECK_THROWS_AS(parse_td("s td 3 tw 1\nb 1 a\nb 2 a\nb 3 a\nt 1 3\nt 2 3\n"), ParseError);
}

TEST_CASE("vertex-count limits cut off the searches") {
  SizeLimits tight;
  tight.tw = 2;
  tight.ghw = 2;
  tight.fhw = 2;
  tight.hw = 2;
  CHECK_THROWS_AS(exact_width(triangle(), WidthKind::tw, tight), SizeLimitError);
  CHECK_THROWS_AS(exact_width(triangle(), WidthKind::ghw, tight), SizeLimitError);
  CHECK_THROWS_AS(exact_width(triangle(), WidthKind::fhw, tight), SizeLimitError);
  CHECK_THROWS_AS(exact_hw(triangle(), 2, tight), SizeLimitError);
  CHECK_THROWS_AS(subw_bounds(triangle(), tight), SizeLimitError);
}
