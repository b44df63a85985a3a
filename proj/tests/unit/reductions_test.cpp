#include <doctest.h>

#include "semwidth/errors.hpp"
#include "semwidth/hom.hpp"
#include "semwidth/model.hpp"
#include "semwidth/reductions.hpp"
#include "semwidth/solver.hpp"

using namespace semwidth;

namespace {

Structure str(const std::string& text) { return parse_structure(text); }

}  // namespace

TEST_CASE("star expansion pins every element with its own unary relation") {
  Structure a = str("E(x,y).\n");
  Structure s = star_expand(a);
  CHECK(s.signature.has("U_x"));
  CHECK(s.signature.has("U_y"));
  CHECK(s.signature.arity_of("U_x") == 1);
  CHECK(s.facts.at("U_x") == std::set<Fact>{{"x"}});
  CHECK(s.facts.at("U_y") == std::set<Fact>{{"y"}});
  CHECK(s.facts.at("E") == a.facts.at("E"));
  CHECK(s.domain == a.domain);

  CHECK_THROWS_AS(star_expand(str("U_a(a).\n")), NameCollisionError);
}

TEST_CASE("satisfying assignments enumerate an edge's local solutions") {
  Structure c = str("E(u,v).\n");
  std::set<std::string> e{"u", "v"};

  auto one = satisfying_assignments(c, str("E(0,1).\n"), e);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Mapping{{"u", "0"}, {"v", "1"}});

  // Both orientations constrain the same edge; no joint solution remains.
  Structure both = str("E(u,v).\nE(v,u).\n");
  CHECK(satisfying_assignments(both, str("E(0,1).\n"), e).empty());

  auto loop = satisfying_assignments(c, str("E(0,0).\n"), e);
  REQUIRE(loop.size() == 1);
  CHECK(loop[0] == Mapping{{"u", "0"}, {"v", "0"}});

  auto ordered = satisfying_assignments(c, str("E(0,1).\nE(1,0).\n"), e);
  REQUIRE(ordered.size() == 2);
  CHECK(ordered[0] == Mapping{{"u", "0"}, {"v", "1"}});
  CHECK(ordered[1] == Mapping{{"u", "1"}, {"v", "0"}});

  CHECK_THROWS_AS(satisfying_assignments(c, str("E(0,1).\n"), {"u"}), NotAnEdgeError);
}

TEST_CASE("pair elements split at the first separator") {
  CHECK(split_pair_element("x@0") == std::pair<std::string, std::string>{"x", "0"});
  CHECK(split_pair_element("x@a@b") == std::pair<std::string, std::string>{"x", "a@b"});
  CHECK_THROWS_AS(split_pair_element("plain"), ParseError);
}

TEST_CASE("reduction realizes each shape fact once per local solution") {
  Structure c = str("E(u,v).\n");
  Structure d = str("E(0,1).\n");
  Structure a = str("R(u,v).\n");
  Instance inst = redh_reduce(c, d, a);

  CHECK(inst.left == star_expand(a));
  CHECK(inst.right.signature == inst.left.signature);
  CHECK(inst.right.domain == std::vector<std::string>{"u@0", "u@1", "v@0", "v@1"});
  CHECK(inst.right.facts.at("U_u") == std::set<Fact>{{"u@0"}, {"u@1"}});
  CHECK(inst.right.facts.at("U_v") == std::set<Fact>{{"v@0"}, {"v@1"}});
  CHECK(inst.right.facts.at("R") == std::set<Fact>{{"u@0", "v@1"}});
}

TEST_CASE("reduction with an explicit identification renames columns") {
  Structure c = str("E(u,v).\n");
  Structure d = str("E(0,1).\n");
  Structure a = str("R(pu,pv).\n");
  Mapping ident{{"pu", "u"}, {"pv", "v"}};
  Instance inst = redh_reduce(c, d, a, ident);
  CHECK(inst.right.facts.at("R") == std::set<Fact>{{"pu@0", "pv@1"}});
}

TEST_CASE("reduction preserves solvability") {
  Structure k2 = str("E(c0,c1).\nE(c1,c0).\n");
  Structure grid = gen_grid_instance(2, k2).left;

  Instance sat = redh_reduce(grid, k2, grid);
  CHECK(solve_bruteforce(grid, k2).first);
  CHECK(solve_bruteforce(sat.left, sat.right).first);

  Structure cyc3 = str("E(a,b).\nE(b,c).\nE(c,a).\n");
  Instance unsat = redh_reduce(cyc3, k2, cyc3);
  CHECK_FALSE(solve_bruteforce(cyc3, k2).first);
  CHECK_FALSE(solve_bruteforce(unsat.left, unsat.right).first);

  // A data structure without matching facts yields an unsolvable instance.
  Structure bare;
  bare.signature = grid.signature;
  bare.domain = {"0"};
  Instance empty = redh_reduce(grid, bare, grid);
  CHECK_FALSE(solve_bruteforce(grid, bare).first);
  CHECK_FALSE(solve_bruteforce(empty.left, empty.right).first);
  CHECK(empty.right.facts.count("E") == 0);
}

TEST_CASE("reduction rejects bad shapes and reserved names") {
  Structure c = str("E(u,v).\n");
  Structure d = str("E(0,1).\n");

  CHECK_THROWS_AS(redh_reduce(c, str("F(0,1).\n"), c), SignatureMismatchError);
  CHECK_THROWS_AS(redh_reduce(c, d, str("R(u,v).\nR(v,w).\n")), HypergraphMismatchError);
  CHECK_THROWS_AS(redh_reduce(c, d, str("R(u,v).\n"), Mapping{{"u", "u"}, {"v", "u"}}),
                  HypergraphMismatchError);
  CHECK_THROWS_AS(redh_reduce(c, d, str("R(u,v).\n"), Mapping{{"u", "u"}}),
                  HypergraphMismatchError);

  Structure c2 = str("E(u,v).\nE(w,z).\n");
  Structure a2 = str("R(u,v).\nR(w,z).\n");
  Mapping crossed{{"u", "u"}, {"v", "w"}, {"w", "v"}, {"z", "z"}};
  CHECK_THROWS_AS(redh_reduce(c2, str("E(0,1).\n"), a2, crossed), HypergraphMismatchError);

  CHECK_THROWS_AS(redh_reduce(c, d, str("R(u@1,v).\n"), Mapping{{"u@1", "u"}, {"v", "v"}}),
                  NameCollisionError);
  CHECK_THROWS_AS(redh_reduce(c, str("E(0@x,1).\n"), c), NameCollisionError);
}

TEST_CASE("witnesses for the reduced instance collapse to scope solutions") {
  Structure k2 = str("E(c0,c1).\nE(c1,c0).\n");
  Structure grid = gen_grid_instance(2, k2).left;
  Instance inst = redh_reduce(grid, k2, grid);

  auto [sat, witness] = solve_bruteforce(inst.left, inst.right);
  REQUIRE(sat);
  Mapping ident;
  for (const auto& x : grid.domain) ident[x] = x;
  Mapping h = redh_extract(grid, k2, ident, *witness);
  CHECK(is_homomorphism(grid, k2, h));

  // Leaving the own column is caught even when the target is a valid element.
  Mapping off = *witness;
  off.at("x_1_1") = "x_1_2@c0";
  CHECK_THROWS_AS(redh_extract(grid, k2, ident, off), NotAHomomorphismError);

  Mapping wrong;
  for (const auto& x : grid.domain) wrong[x] = x + "@c0";
  CHECK_THROWS_AS(redh_extract(grid, k2, ident, wrong), NotAHomomorphismError);
}
