#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace semwidth {

// Relation symbols with arities, kept sorted by name.
struct Signature {
  std::vector<std::pair<std::string, int>> relations;

  bool operator==(const Signature&) const = default;
  bool has(const std::string& name) const;
  int arity_of(const std::string& name) const;  // throws on unknown relation
};

using Fact = std::vector<std::string>;

// Finite relational structure. The domain is sorted and duplicate-free; facts
// are per-relation sets of tuples whose lengths match the relation's arity.
struct Structure {
  Signature signature;
  std::vector<std::string> domain;
  std::map<std::string, std::set<Fact>> facts;

  bool operator==(const Structure&) const = default;
};

void validate_structure(const Structure& s);

struct Hypergraph {
  std::vector<std::string> vertices;  // sorted, unique; isolated vertices allowed
  std::vector<std::pair<std::string, std::set<std::string>>> edges;  // sorted by name

  bool operator==(const Hypergraph&) const = default;
  const std::set<std::string>* edge_named(const std::string& name) const;
};

void validate_hypergraph(const Hypergraph& h);

// A CSP instance: map the left structure homomorphically into the right one.
struct Instance {
  Structure left;
  Structure right;
};

// Total maps between name sets; doubles as homomorphism witness.
using Mapping = std::map<std::string, std::string>;

std::string serialize_mapping(const Mapping& m);  // "x -> y" lines, sorted by source
Mapping parse_mapping(const std::string& text);

Structure parse_structure(const std::string& text);
std::string serialize_structure(const Structure& s);
Hypergraph parse_hypergraph(const std::string& text);
std::string serialize_hypergraph(const Hypergraph& h);

Hypergraph hypergraph_of(const Structure& s);
std::uint64_t structure_size(const Structure& s);
Hypergraph induced_subhypergraph(const Hypergraph& h, const std::set<std::string>& u);
Instance gen_grid_instance(int n, const Structure& g);

// Builders that infer the signature/domain/vertex list; used by generators and
// tests. Both validate the result.
Structure structure_from_facts(const std::vector<std::pair<std::string, Fact>>& facts);
Hypergraph hypergraph_from_edges(const std::vector<std::pair<std::string, std::set<std::string>>>& edges);

// Induced substructure on a subset of the domain.
Structure restrict_structure(const Structure& s, const std::set<std::string>& keep);

}  // namespace semwidth
