#include "semwidth/model.hpp"

#include "semwidth/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace semwidth {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// '@' is reserved for serialized domain pairs "x@d" and may appear inside
// constants, never inside relation or edge names.
bool is_const_char(char c) { return is_name_char(c) || c == '@'; }

struct LineScanner {
  const std::string& line;
  int number;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(number) + ": " + what);
  }
  void skip_ws() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
  }
  std::string token(bool allow_at, const char* what) {
    skip_ws();
    std::size_t start = pos;
    auto ok = allow_at ? is_const_char : is_name_char;
    while (pos < line.size() && ok(line[pos])) ++pos;
    if (pos == start) fail(std::string("expected ") + what);
    return line.substr(start, pos - start);
  }
  void expect(char c) {
    skip_ws();
    if (pos >= line.size() || line[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }
  void expect_end() {
    skip_ws();
    if (pos != line.size()) fail("trailing characters after '.'");
  }
};

// Shared grammar of .str and .hg files: `Name(c1,c2,...).` per line.
std::vector<std::pair<std::string, Fact>> parse_fact_lines(const std::string& text) {
  std::vector<std::pair<std::string, Fact>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    LineScanner sc{line, number};
    sc.skip_ws();
    if (sc.pos == line.size()) continue;
    if (line[sc.pos] == '#') continue;
    std::string name = sc.token(false, "relation name");
    sc.expect('(');
    Fact tuple;
    tuple.push_back(sc.token(true, "constant"));
    for (;;) {
      sc.skip_ws();
      if (sc.pos < line.size() && line[sc.pos] == ',') {
        ++sc.pos;
        tuple.push_back(sc.token(true, "constant"));
      } else {
        break;
      }
    }
    sc.expect(')');
    sc.expect('.');
    sc.expect_end();
    out.emplace_back(std::move(name), std::move(tuple));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

bool Signature::has(const std::string& name) const {
  for (const auto& [rel, ar] : relations)
    if (rel == name) return true;
  return false;
}

int Signature::arity_of(const std::string& name) const {
  for (const auto& [rel, ar] : relations)
    if (rel == name) return ar;
  throw SignatureMismatchError("unknown relation: " + name);
}

void validate_structure(const Structure& s) {
  std::set<std::string> dom(s.domain.begin(), s.domain.end());
  if (dom.size() != s.domain.size()) throw ParseError("duplicate domain element");
  if (!std::is_sorted(s.domain.begin(), s.domain.end()))
    throw ParseError("domain not sorted");
  std::set<std::string> seen;
  for (const auto& [rel, ar] : s.signature.relations) {
    if (!seen.insert(rel).second) throw ParseError("duplicate relation: " + rel);
    if (ar < 1) throw ParseError("arity must be >= 1 for relation " + rel);
  }
  for (const auto& [rel, tuples] : s.facts) {
    int ar = s.signature.arity_of(rel);
    for (const auto& t : tuples) {
      if (static_cast<int>(t.size()) != ar)
        throw ParseError("arity mismatch for relation " + rel);
      for (const auto& e : t)
        if (!dom.count(e)) throw ParseError("fact element outside domain: " + e);
    }
  }
  for (const auto& [rel, tuples] : s.facts)
    if (!s.signature.has(rel)) throw ParseError("facts for unknown relation: " + rel);
}

const std::set<std::string>* Hypergraph::edge_named(const std::string& name) const {
  for (const auto& [n, set] : edges)
    if (n == name) return &set;
  return nullptr;
}

void validate_hypergraph(const Hypergraph& h) {
  std::set<std::string> verts(h.vertices.begin(), h.vertices.end());
  if (verts.size() != h.vertices.size()) throw ParseError("duplicate vertex");
  if (!std::is_sorted(h.vertices.begin(), h.vertices.end()))
    throw ParseError("vertices not sorted");
  std::set<std::string> names;
  for (const auto& [name, set] : h.edges) {
    if (!names.insert(name).second) throw ParseError("duplicate edge name: " + name);
    if (set.empty()) throw ParseError("empty edge: " + name);
    for (const auto& v : set)
      if (!verts.count(v)) throw ParseError("edge vertex outside vertex set: " + v);
  }
  if (!std::is_sorted(h.edges.begin(), h.edges.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; }))
    throw ParseError("edges not sorted by name");
}

std::string serialize_mapping(const Mapping& m) {
  std::string out;
  for (const auto& [from, to] : m) out += from + " -> " + to + "\n";
  return out;
}

Mapping parse_mapping(const std::string& text) {
  Mapping m;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    LineScanner sc{line, number};
    sc.skip_ws();
    if (sc.pos == line.size() || line[sc.pos] == '#') continue;
    std::string from = sc.token(true, "source element");
    sc.expect('-');
    sc.expect('>');
    std::string to = sc.token(true, "target element");
    sc.skip_ws();
    if (sc.pos != line.size()) sc.fail("trailing characters");
    if (m.count(from)) sc.fail("duplicate source element " + from);
    m[from] = to;
  }
  return m;
}

Structure parse_structure(const std::string& text) {
  Structure s;
  std::map<std::string, int> arity;
  std::set<std::string> dom;
  int number = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++number;
    LineScanner sc{line, number};
    sc.skip_ws();
    if (sc.pos == line.size() || line[sc.pos] == '#') continue;
    std::string rel = sc.token(false, "relation name");
    sc.expect('(');
    Fact tuple;
    tuple.push_back(sc.token(true, "constant"));
    for (;;) {
      sc.skip_ws();
      if (sc.pos < line.size() && line[sc.pos] == ',') {
        ++sc.pos;
        tuple.push_back(sc.token(true, "constant"));
      } else {
        break;
      }
    }
    sc.expect(')');
    sc.expect('.');
    sc.expect_end();
    auto [it, fresh] = arity.emplace(rel, static_cast<int>(tuple.size()));
    if (!fresh && it->second != static_cast<int>(tuple.size()))
      throw ParseError("line " + std::to_string(number) + ": arity mismatch for relation " +
                       rel + " (expected " + std::to_string(it->second) + ", got " +
                       std::to_string(tuple.size()) + ")");
    for (const auto& c : tuple) dom.insert(c);
    s.facts[rel].insert(std::move(tuple));
  }
  for (const auto& [rel, ar] : arity) s.signature.relations.emplace_back(rel, ar);
  s.domain.assign(dom.begin(), dom.end());
  validate_structure(s);
  return s;
}

std::string serialize_structure(const Structure& s) {
  std::string out;
  for (const auto& [rel, tuples] : s.facts)
    for (const auto& t : tuples) out += rel + "(" + join(t, ",") + ").\n";
  return out;
}

Hypergraph parse_hypergraph(const std::string& text) {
  auto lines = parse_fact_lines(text);
  Hypergraph h;
  std::set<std::string> verts;
  std::set<std::string> names;
  for (auto& [name, tuple] : lines) {
    if (!names.insert(name).second) throw ParseError("duplicate edge name: " + name);
    std::set<std::string> set(tuple.begin(), tuple.end());
    for (const auto& v : set) verts.insert(v);
    h.edges.emplace_back(name, std::move(set));
  }
  h.vertices.assign(verts.begin(), verts.end());
  std::sort(h.edges.begin(), h.edges.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  validate_hypergraph(h);
  return h;
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::string out;
  for (const auto& [name, set] : h.edges) {
    std::vector<std::string> parts(set.begin(), set.end());
    out += name + "(" + join(parts, ",") + ").\n";
  }
  return out;
}

Hypergraph hypergraph_of(const Structure& s) {
  std::set<std::set<std::string>> sets;
  for (const auto& [rel, tuples] : s.facts)
    for (const auto& t : tuples) sets.insert(std::set<std::string>(t.begin(), t.end()));
  Hypergraph h;
  h.vertices = s.domain;
  std::set<std::string> used;
  for (const auto& set : sets) {
    std::vector<std::string> parts(set.begin(), set.end());
    std::string name = join(parts, "_");
    // Joined names can collide when element names contain '_'; disambiguate
    // deterministically (sets are visited in lexicographic order).
    while (!used.insert(name).second) name += "_x";
    h.edges.emplace_back(std::move(name), set);
  }
  std::sort(h.edges.begin(), h.edges.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return h;
}

std::uint64_t structure_size(const Structure& s) {
  std::uint64_t total = s.signature.relations.size() + s.domain.size();
  for (const auto& [rel, ar] : s.signature.relations) {
    auto it = s.facts.find(rel);
    if (it != s.facts.end())
      total += static_cast<std::uint64_t>(it->second.size()) * static_cast<std::uint64_t>(ar);
  }
  return total;
}

Hypergraph induced_subhypergraph(const Hypergraph& h, const std::set<std::string>& u) {
  std::set<std::string> verts(h.vertices.begin(), h.vertices.end());
  for (const auto& v : u)
    if (!verts.count(v)) throw UnknownVertexError("unknown vertex: " + v);
  Hypergraph out;
  out.vertices.assign(u.begin(), u.end());
  std::set<std::set<std::string>> seen;
  for (const auto& [name, set] : h.edges) {
    std::set<std::string> inter;
    for (const auto& v : set)
      if (u.count(v)) inter.insert(v);
    if (inter.empty()) continue;
    // Duplicates collapse; the lexicographically least edge name survives
    // because edges are visited in name order.
    if (seen.insert(inter).second) out.edges.emplace_back(name, std::move(inter));
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Instance gen_grid_instance(int n, const Structure& g) {
  if (n < 1) throw std::invalid_argument("grid size must be >= 1");
  Signature expected;
  expected.relations.emplace_back("E", 2);
  if (g.signature != expected)
    throw SignatureMismatchError("grid template must have exactly the signature {E/2}");
  auto elem = [](int i, int j) {
    return "x_" + std::to_string(i) + "_" + std::to_string(j);
  };
  Structure left;
  left.signature = expected;
  std::set<std::string> dom;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) dom.insert(elem(i, j));
  left.domain.assign(dom.begin(), dom.end());
  auto& tuples = left.facts["E"];
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      tuples.insert({elem(i, j), elem(i + 1, j)});
      tuples.insert({elem(i + 1, j), elem(i, j)});
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < n; ++j) {
      tuples.insert({elem(i, j), elem(i, j + 1)});
      tuples.insert({elem(i, j + 1), elem(i, j)});
    }
  if (tuples.empty()) left.facts.erase("E");
  validate_structure(left);
  return Instance{std::move(left), g};
}

Structure structure_from_facts(const std::vector<std::pair<std::string, Fact>>& facts) {
  Structure s;
  std::map<std::string, int> arity;
  std::set<std::string> dom;
  for (const auto& [rel, tuple] : facts) {
    if (tuple.empty()) throw ParseError("empty tuple for relation " + rel);
    auto [it, fresh] = arity.emplace(rel, static_cast<int>(tuple.size()));
    if (!fresh && it->second != static_cast<int>(tuple.size()))
      throw ParseError("arity mismatch for relation " + rel);
    for (const auto& c : tuple) dom.insert(c);
    s.facts[rel].insert(tuple);
  }
  for (const auto& [rel, ar] : arity) s.signature.relations.emplace_back(rel, ar);
  s.domain.assign(dom.begin(), dom.end());
  validate_structure(s);
  return s;
}

Hypergraph hypergraph_from_edges(
    const std::vector<std::pair<std::string, std::set<std::string>>>& edges) {
  Hypergraph h;
  std::set<std::string> verts;
  std::set<std::string> names;
  for (const auto& [name, set] : edges) {
    if (!names.insert(name).second) throw ParseError("duplicate edge name: " + name);
    if (set.empty()) throw ParseError("empty edge: " + name);
    for (const auto& v : set) verts.insert(v);
    h.edges.emplace_back(name, set);
  }
  h.vertices.assign(verts.begin(), verts.end());
  std::sort(h.edges.begin(), h.edges.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  validate_hypergraph(h);
  return h;
}

Structure restrict_structure(const Structure& s, const std::set<std::string>& keep) {
  Structure out;
  out.signature = s.signature;
  for (const auto& e : s.domain)
    if (keep.count(e)) out.domain.push_back(e);
  for (const auto& [rel, tuples] : s.facts) {
    std::set<Fact> kept;
    for (const auto& t : tuples) {
      bool inside = true;
      for (const auto& e : t)
        if (!keep.count(e)) {
          inside = false;
          break;
        }
      if (inside) kept.insert(t);
    }
    if (!kept.empty()) out.facts[rel] = std::move(kept);
  }
  validate_structure(out);
  return out;
}

}  // namespace semwidth
