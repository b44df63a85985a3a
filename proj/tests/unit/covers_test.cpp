#include <doctest.h>

#include "oracles.hpp"
#include "semwidth/covers.hpp"
#include "semwidth/errors.hpp"
#include "semwidth/gen.hpp"
#include "semwidth/hom.hpp"
#include "semwidth/lp.hpp"
#include "semwidth/model.hpp"

#include <random>

using namespace semwidth;

namespace {

Hypergraph triangle() { return parse_hypergraph("e1(a,b).\ne2(b,c).\ne3(a,c).\n"); }
Hypergraph edge3() { return parse_hypergraph("e1(a,b,c).\n"); }
Hypergraph square() { return parse_hypergraph("e1(a,b).\ne2(b,c).\ne3(c,d).\ne4(a,d).\n"); }

std::set<std::string> all_vertices(const Hypergraph& h) {
  return {h.vertices.begin(), h.vertices.end()};
}

}  // namespace

TEST_CASE("integral covers of the worked hypergraphs") {
  CHECK(integral_cover(triangle(), all_vertices(triangle())).size() == 2);
  CHECK(integral_cover(edge3(), all_vertices(edge3())).size() == 1);
  CHECK(integral_cover(triangle(), {}).size() == 0);
  CHECK_THROWS_AS(integral_cover(triangle(), {"z"}), UnknownVertexError);
  Hypergraph isolated;
  isolated.vertices = {"a", "b", "z"};
  isolated.edges = {{"e1", {"a", "b"}}};
  CHECK_THROWS_AS(integral_cover(isolated, {"z"}), UncoverableVertexError);
}

TEST_CASE("fractional covers of the worked hypergraphs") {
  FractionalCover tri = fractional_cover(triangle(), all_vertices(triangle()));
  CHECK(tri.total == Rational(3) / 2);
  CHECK(tri.weights.at("e1") == Rational(1) / 2);
  CHECK(tri.weights.at("e2") == Rational(1) / 2);
  CHECK(tri.weights.at("e3") == Rational(1) / 2);

  CHECK(fractional_cover(edge3(), all_vertices(edge3())).total == 1);
  CHECK(fractional_cover(square(), all_vertices(square())).total == 2);
}

TEST_CASE("cover serialization lists exact fractions") {
  FractionalCover c = fractional_cover(edge3(), all_vertices(edge3()));
  CHECK(serialize_fractional_cover(c) == "e1 1/1\ntotal 1/1\n");
}

TEST_CASE("lp optimum matches basic-solution enumeration on random pools") {
  std::mt19937_64 rng(811);
  for (int i = 0; i < 40; ++i) {
    int v = 2 + static_cast<int>(rng() % 5);
    int e = 1 + static_cast<int>(rng() % 6);
    Hypergraph h = gen_random_hypergraph(v, e, rng());
    if (h.edges.size() > 6) continue;
    std::set<std::string> covered;
    for (const auto& [name, set] : h.edges) covered.insert(set.begin(), set.end());
    FractionalCover c = fractional_cover(h, covered);
    CHECK(c.total == oracles::min_fractional_cover(h, covered));
    IntegralCover ic = integral_cover(h, covered);
    CHECK(ic.size() == oracles::min_integral_cover(h, covered));
    CHECK(c.total <= Rational(ic.size()));
    std::set<std::string> chosen(ic.edges.begin(), ic.edges.end());
    std::set<std::string> reached;
    for (const auto& [name, set] : h.edges) {
      if (chosen.count(name)) reached.insert(set.begin(), set.end());
    }
    CHECK(std::includes(reached.begin(), reached.end(), covered.begin(), covered.end()));
  }
}

TEST_CASE("single covering edge forces rho_star equal rho") {
  Hypergraph h = parse_hypergraph("big(a,b,c).\nsmall(a,b).\n");
  CHECK(integral_cover(h, {"a", "b", "c"}).size() == 1);
  CHECK(fractional_cover(h, {"a", "b", "c"}).total == 1);
}

TEST_CASE("pushforward along the identity is the identity") {
  Hypergraph h = triangle();
  FractionalCover x = fractional_cover(h, all_vertices(h));
  Mapping id{{"a", "a"}, {"b", "b"}, {"c", "c"}};
  FractionalCover pushed = pushforward_cover(h, h, id, x);
  CHECK(pushed.weights == x.weights);
  CHECK(pushed.total == x.total);
}

TEST_CASE("pushforward adds weights of collapsing edges") {
  Hypergraph g = parse_hypergraph("p(a,b).\nq(a,b).\n");
  Hypergraph h = parse_hypergraph("e(a,b).\n");
  FractionalCover x;
  x.weights["p"] = Rational(1) / 3;
  x.weights["q"] = Rational(2) / 3;
  x.total = 1;
  FractionalCover pushed = pushforward_cover(g, h, {{"a", "a"}, {"b", "b"}}, x);
  CHECK(pushed.weights.at("e") == 1);
  CHECK(pushed.total == 1);
}

TEST_CASE("pushforward carries a grid cover onto its core edge") {
  Structure k2 = parse_structure("E(c0,c1).\nE(c1,c0).\n");
  Instance inst = gen_grid_instance(2, k2);
  Hypergraph g = hypergraph_of(inst.left);
  Hypergraph h = hypergraph_of(k2);
  Mapping f;
  for (const auto& v : g.vertices) {
    // Checkerboard 2-coloring: parity of i+j in x_i_j.
    int sum = (v[2] - '0') + (v[4] - '0');
    f[v] = sum % 2 ? "c1" : "c0";
  }
  FractionalCover x = fractional_cover(g, all_vertices(g));
  FractionalCover pushed = pushforward_cover(g, h, f, x);
  CHECK(pushed.total == x.total);
  CHECK(pushed.weights.at(h.edges[0].first) == x.total);
}

TEST_CASE("pushforward rejects non-homomorphisms and unknown edges") {
  Hypergraph g = parse_hypergraph("p(a,b).\n");
  Hypergraph h = parse_hypergraph("e(a).\n");
  FractionalCover x;
  x.weights["p"] = 1;
  x.total = 1;
  CHECK_THROWS_AS(pushforward_cover(g, h, {{"a", "a"}}, x), NotAHomomorphismError);
  CHECK_THROWS_AS(pushforward_cover(g, h, {{"a", "a"}, {"b", "z"}}, x), NotAHomomorphismError);
  CHECK_THROWS_AS(pushforward_cover(g, triangle(), {{"a", "a"}, {"b", "z"}}, x),
                  NotAHomomorphismError);
  Hypergraph h2 = parse_hypergraph("e(a,b).\n");
  FractionalCover bad;
  bad.weights["nope"] = 1;
  bad.total = 1;
  CHECK_THROWS_AS(pushforward_cover(g, h2, {{"a", "a"}, {"b", "b"}}, bad), NotAnEdgeError);
}

TEST_CASE("reduced detection and the four violation classes") {
  CHECK(is_reduced(triangle()));
  CHECK_FALSE(reduced_violation(triangle()).has_value());

  Hypergraph isolated = triangle();
  isolated.vertices.push_back("z");
  CHECK_FALSE(is_reduced(isolated));

  Hypergraph dup_edge = parse_hypergraph("e1(a,b).\ne2(a,b).\n");
  CHECK_FALSE(is_reduced(dup_edge));

  Hypergraph same_incidence = parse_hypergraph("e1(a,b).\ne2(a,b,c).\n");
  // a and b lie in exactly the same edges.
  CHECK_FALSE(is_reduced(same_incidence));

  Hypergraph empty_edge;
  empty_edge.vertices = {"a"};
  empty_edge.edges.emplace_back("e", std::set<std::string>{});
  CHECK_FALSE(is_reduced(empty_edge));
  CHECK(reduced_violation(empty_edge).has_value());
}

TEST_CASE("reduce reaches a fixpoint and keeps least names") {
  Hypergraph isolated = triangle();
  isolated.vertices.push_back("z");
  CHECK(reduce(isolated) == triangle());

  Hypergraph dup_edge = parse_hypergraph("e1(a,b).\ne2(a,b).\ne3(b,c).\n");
  Hypergraph r = reduce(dup_edge);
  std::set<std::string> names;
  for (const auto& [name, set] : r.edges) names.insert(name);
  CHECK(names == std::set<std::string>{"e1", "e3"});

  Hypergraph same_incidence = parse_hypergraph("e1(a,b).\ne2(a,b,c).\n");
  Hypergraph m = reduce(same_incidence);
  CHECK(m.vertices == std::vector<std::string>{"a", "c"});
  CHECK(is_reduced(m));

  std::mt19937_64 rng(4242);
  for (int i = 0; i < 30; ++i) {
    Hypergraph h = gen_random_hypergraph(2 + static_cast<int>(rng() % 6),
                                         1 + static_cast<int>(rng() % 7), rng());
    Hypergraph once = reduce(h);
    CHECK(is_reduced(once));
    CHECK(reduce(once) == once);
  }
}

TEST_CASE("dual of the triangle is a triangle and duality is an involution") {
  Hypergraph d = dual(triangle());
  CHECK(d.vertices == std::vector<std::string>{"e1", "e2", "e3"});
  std::set<std::set<std::string>> sets;
  for (const auto& [name, set] : d.edges) sets.insert(set);
  CHECK(sets == std::set<std::set<std::string>>{{"e1", "e3"}, {"e1", "e2"}, {"e2", "e3"}});
  CHECK(dual(d) == triangle());

  Hypergraph isolated = triangle();
  isolated.vertices.push_back("z");
  CHECK_THROWS_AS(dual(isolated), NotReducedError);
}

TEST_CASE("transversality of the worked hypergraphs") {
  Transversality tri = transversality(triangle());
  CHECK(tri.tau == 2);
  CHECK(tri.tau_star == Rational(3) / 2);
  Transversality single = transversality(edge3());
  CHECK(single.tau == 1);
  CHECK(single.tau_star == 1);
  Transversality two = transversality(parse_hypergraph("e1(a,b).\ne2(c,d).\n"));
  CHECK(two.tau == 2);
  CHECK(two.tau_star == 2);
}

TEST_CASE("gap report of the worked hypergraphs") {
  GapReport tri = gap_report(triangle());
  CHECK(tri.rho == 2);
  CHECK(tri.rho_star == Rational(3) / 2);
  CHECK(tri.tau == 2);
  CHECK(tri.tau_star == Rational(3) / 2);
  CHECK(tri.cigap == Rational(4) / 3);
  CHECK(tri.tigap_of_dual == Rational(4) / 3);

  GapReport single = gap_report(reduce(edge3()));
  CHECK(single.cigap == 1);
  CHECK(single.tigap_of_dual == 1);
}

TEST_CASE("covers and transversals agree with oracles through the dual") {
  std::mt19937_64 rng(909);
  int done = 0;
  for (int i = 0; done < 25 && i < 200; ++i) {
    Hypergraph h = reduce(gen_random_hypergraph(2 + static_cast<int>(rng() % 5),
                                                1 + static_cast<int>(rng() % 5), rng()));
    if (h.edges.empty() || h.edges.size() > 6) continue;
    ++done;
    GapReport g = gap_report(h);
    CHECK(g.rho == oracles::min_integral_cover(h, all_vertices(h)));
    CHECK(g.rho_star == oracles::min_fractional_cover(h, all_vertices(h)));
    CHECK(g.tau == oracles::min_transversal(h));
    CHECK(g.tau_star == oracles::min_fractional_transversal(h));
    Hypergraph d = dual(h);
    CHECK(g.rho == oracles::min_transversal(d));
    CHECK(g.rho_star == oracles::min_fractional_transversal(d));
  }
  CHECK(done == 25);
}

TEST_CASE("vc dimension of the worked hypergraphs") {
  VcResult single = vc_dimension(edge3());
  CHECK(single.vc == 0);
  VcResult tri = vc_dimension(triangle());
  CHECK(tri.vc == 1);
  CHECK(tri.witness == std::set<std::string>{"a"});
  VcResult mixed = vc_dimension(parse_hypergraph("e1(c).\ne2(a).\ne3(b).\ne4(a,b).\n"));
  CHECK(mixed.vc == 2);
  CHECK(mixed.witness == std::set<std::string>{"a", "b"});
  VcResult none = vc_dimension(hypergraph_from_edges({}));
  CHECK(none.vc == 0);
  CHECK(none.witness.empty());
}

TEST_CASE("vc dimension matches full enumeration on a random pool") {
  std::mt19937_64 rng(7117);
  for (int i = 0; i < 30; ++i) {
    Hypergraph h = gen_random_hypergraph(2 + static_cast<int>(rng() % 6),
                                         1 + static_cast<int>(rng() % 8), rng());
    CHECK(vc_dimension(h).vc == oracles::vc_by_enumeration(h));
  }
}

TEST_CASE("exotic witnesses") {
  Hypergraph two = parse_hypergraph("e1(v1).\ne2(v2).\ne3(v1,v2).\n");
  auto w = exotic_witness(two, 2);
  REQUIRE(w.has_value());
  CHECK(*w == std::set<std::string>{"v1", "v2"});

  auto tri = exotic_witness(triangle(), 2);
  REQUIRE(tri.has_value());
  CHECK(*tri == std::set<std::string>{"a", "b"});

  CHECK_FALSE(exotic_witness(edge3(), 2).has_value());
  auto one = exotic_witness(edge3(), 1);
  REQUIRE(one.has_value());
  CHECK(one->size() == 1);
}

TEST_CASE("fractional cover of the core never exceeds the structure's") {
  std::mt19937_64 rng(5150);
  for (int i = 0; i < 25; ++i) {
    RandomStructureParams p;
    p.max_elements = 5;
    p.density_percent = 25;
    Structure a = gen_random_structure(rng(), p);
    Hypergraph ha = hypergraph_of(a);
    Hypergraph hc = hypergraph_of(compute_core(a).core);
    auto covered = [](const Hypergraph& h) {
      std::set<std::string> out;
      for (const auto& [name, set] : h.edges) out.insert(set.begin(), set.end());
      return out;
    };
    Rational full = covered(ha).empty() ? Rational(0) : fractional_cover(ha, covered(ha)).total;
    Rational core = covered(hc).empty() ? Rational(0) : fractional_cover(hc, covered(hc)).total;
    CHECK(core <= full);
  }
}

TEST_CASE("raw covering lp solves tiny programs exactly") {
  // Two objects, three sets: {0}, {1}, {0,1}.
  CoveringLpSolution s = solve_covering_lp(3, {{0, 2}, {1, 2}});
  CHECK(s.total == 1);
  CHECK(s.weights.size() == 3);
  Rational sum0 = s.weights[0] + s.weights[2];
  Rational sum1 = s.weights[1] + s.weights[2];
  CHECK(sum0 >= 1);
  CHECK(sum1 >= 1);
}
