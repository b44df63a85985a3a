#include <doctest.h>

#include "semwidth/errors.hpp"
#include "semwidth/model.hpp"

using namespace semwidth;

TEST_CASE("parse_structure reads facts and infers the signature") {
  Structure s = parse_structure("E(a,b).\n");
  CHECK(s.domain == std::vector<std::string>{"a", "b"});
  CHECK(s.signature.relations == std::vector<std::pair<std::string, int>>{{"E", 2}});
  CHECK(s.facts.at("E") == std::set<Fact>{{"a", "b"}});

  Structure pair = parse_structure("E(a,b).\nE(b,a).\n");
  CHECK(pair.domain == std::vector<std::string>{"a", "b"});
  CHECK(pair.facts.at("E").size() == 2);
}

TEST_CASE("parse_structure tolerates comments, blanks and spacing") {
  Structure s = parse_structure("# scope\n\n  E( a , b ) .\nR (c).\n");
  CHECK(s.domain == std::vector<std::string>{"a", "b", "c"});
  CHECK(s.facts.at("R") == std::set<Fact>{{"c"}});
}

TEST_CASE("parse_structure rejects inconsistent arities and syntax errors") {
  CHECK_THROWS_AS(parse_structure("E(a,b).\nE(a,b,c).\n"), ParseError);
  CHECK_THROWS_AS(parse_structure("E(a,b)\n"), ParseError);
  CHECK_THROWS_AS(parse_structure("E().\n"), ParseError);
  CHECK_THROWS_AS(parse_structure("E(a,.\n"), ParseError);
}

TEST_CASE("structure round trip is the identity") {
  std::string text = "E(a,b).\nE(b,a).\nU(a).\n";
  Structure once = parse_structure(text);
  Structure twice = parse_structure(serialize_structure(once));
  CHECK(once == twice);
}

TEST_CASE("duplicate facts collapse") {
  Structure s = parse_structure("E(a,b).\nE(a,b).\n");
  CHECK(s.facts.at("E").size() == 1);
}

TEST_CASE("hypergraph_of collapses permutations and repeated elements") {
  Structure pair = parse_structure("E(a,b).\nE(b,a).\n");
  Hypergraph h = hypergraph_of(pair);
  CHECK(h.vertices == std::vector<std::string>{"a", "b"});
  REQUIRE(h.edges.size() == 1);
  CHECK(h.edges[0].first == "a_b");
  CHECK(h.edges[0].second == std::set<std::string>{"a", "b"});

  Hypergraph loop = hypergraph_of(parse_structure("R(a,a).\n"));
  REQUIRE(loop.edges.size() == 1);
  CHECK(loop.edges[0].second == std::set<std::string>{"a"});
}

TEST_CASE("hypergraph_of keeps isolated domain elements as vertices") {
  Structure s = parse_structure("E(a,b).\nU(c).\n");
  s.domain.push_back("z");
  std::sort(s.domain.begin(), s.domain.end());
  Hypergraph h = hypergraph_of(s);
  CHECK(h.vertices == s.domain);
}

TEST_CASE("hypergraph_of disambiguates colliding joined names") {
  // One element literally named a_b plus the two-element set {a,b}.
  Structure s = parse_structure("R(a_b).\nE(a,b).\n");
  Hypergraph h = hypergraph_of(s);
  REQUIRE(h.edges.size() == 2);
  CHECK(h.edges[0].first == "a_b");
  CHECK(h.edges[1].first == "a_b_x");
  CHECK(h.edge_named("a_b") != nullptr);
  CHECK(h.edge_named("missing") == nullptr);
}

TEST_CASE("structure_size follows the flat formula") {
  CHECK(structure_size(parse_structure("E(a,b).\n")) == 5);
  Structure empty;
  empty.signature.relations.emplace_back("E", 2);
  CHECK(structure_size(empty) == 1);
}

TEST_CASE("induced subhypergraph intersects and deduplicates") {
  Hypergraph tri = parse_hypergraph("e1(a,b).\ne2(b,c).\ne3(a,c).\n");
  Hypergraph sub = induced_subhypergraph(tri, {"a", "b"});
  std::set<std::set<std::string>> sets;
  for (const auto& [name, set] : sub.edges) sets.insert(set);
  CHECK(sets == std::set<std::set<std::string>>{{"a", "b"}, {"a"}, {"b"}});

  Hypergraph full = induced_subhypergraph(tri, {"a", "b", "c"});
  std::set<std::set<std::string>> full_sets;
  for (const auto& [name, set] : full.edges) full_sets.insert(set);
  CHECK(full_sets == std::set<std::set<std::string>>{{"a", "b"}, {"b", "c"}, {"a", "c"}});

  CHECK_THROWS_AS(induced_subhypergraph(tri, {"d"}), UnknownVertexError);
}

TEST_CASE("grid instances have the advertised shape") {
  Structure k2 = parse_structure("E(c0,c1).\nE(c1,c0).\n");
  Instance two = gen_grid_instance(2, k2);
  CHECK(two.left.domain.size() == 4);
  CHECK(two.left.facts.at("E").size() == 8);
  CHECK(structure_size(two.left) == 21);

  Instance one = gen_grid_instance(1, k2);
  CHECK(one.left.domain.size() == 1);
  CHECK(one.left.facts.count("E") == 0);

  Instance three = gen_grid_instance(3, k2);
  CHECK(three.left.domain.size() == 9);
  CHECK(three.left.facts.at("E").size() == 24);

  CHECK(structure_size(one.left) < structure_size(two.left));
  CHECK(structure_size(two.left) < structure_size(three.left));

  Hypergraph h2 = hypergraph_of(two.left);
  CHECK(h2.edges.size() == 4);

  CHECK_THROWS_AS(gen_grid_instance(2, parse_structure("F(a,b).\n")), SignatureMismatchError);
  CHECK_THROWS_AS(gen_grid_instance(0, k2), std::invalid_argument);
}

TEST_CASE("hypergraph files parse and reject duplicate edge names") {
  Hypergraph h = parse_hypergraph("e1(a,b,b).\ne2(c).\n");
  CHECK(h.edges[0].second == std::set<std::string>{"a", "b"});
  CHECK(h.vertices == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(parse_hypergraph("e1(a).\ne1(b).\n"), ParseError);
  Hypergraph again = parse_hypergraph(serialize_hypergraph(h));
  CHECK(again == h);
}

TEST_CASE("mapping files round trip") {
  Mapping m{{"a", "x"}, {"b", "y"}};
  CHECK(serialize_mapping(m) == "a -> x\nb -> y\n");
  CHECK(parse_mapping(serialize_mapping(m)) == m);
  CHECK_THROWS_AS(parse_mapping("a -> x\na -> y\n"), ParseError);
}

TEST_CASE("restrict_structure keeps only inside facts") {
  Structure s = parse_structure("E(a,b).\nE(b,c).\nU(a).\n");
  Structure r = restrict_structure(s, {"a", "b"});
  CHECK(r.domain == std::vector<std::string>{"a", "b"});
  CHECK(r.facts.at("E") == std::set<Fact>{{"a", "b"}});
  CHECK(r.facts.at("U") == std::set<Fact>{{"a"}});
}
