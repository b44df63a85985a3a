#include "semwidth/check.hpp"
#include "semwidth/covers.hpp"
#include "semwidth/decomp.hpp"
#include "semwidth/errors.hpp"
#include "semwidth/gen.hpp"
#include "semwidth/hom.hpp"
#include "semwidth/limits.hpp"
#include "semwidth/model.hpp"
#include "semwidth/rational.hpp"
#include "semwidth/reductions.hpp"
#include "semwidth/semantic.hpp"
#include "semwidth/solver.hpp"
#include "semwidth/ucq.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace semwidth;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
  std::filesystem::path p(path);
  p.replace_extension();
  return p.string() + suffix;
}

WidthKind kind_from_name(const std::string& name) {
  if (name == "tw") return WidthKind::tw;
  if (name == "ghw") return WidthKind::ghw;
  return WidthKind::fhw;
}

int cmd_parse(const std::string& path) {
  std::string text = slurp(path);
  if (path.ends_with(".hg")) {
    std::cout << serialize_hypergraph(parse_hypergraph(text));
  } else if (path.ends_with(".ucq")) {
    std::cout << serialize_ucq(parse_ucq(text));
  } else if (path.ends_with(".td")) {
    ParsedTd parsed = parse_td(text);
    if (parsed.covers) {
      CoveredDecomposition d{parsed.td, *parsed.covers};
      std::cout << serialize_td(d, parsed.metric, parsed.value);
    } else {
      std::cout << serialize_td(parsed.td, parsed.metric, parsed.value);
    }
  } else {
    std::cout << serialize_structure(parse_structure(text));
  }
  return 0;
}

int cmd_width(const std::string& kind, const std::string& path, const std::string& td_out) {
  Hypergraph h = parse_hypergraph(slurp(path));
  ExactWidth ew = exact_width(h, kind_from_name(kind), SizeLimits::from_env());
  std::cout << kind << " " << rational_display(ew.value) << "\n";
  if (!td_out.empty()) spill(td_out, serialize_td(ew.witness, kind, ew.value));
  return 0;
}

int cmd_hw(const std::string& path, const std::string& td_out, int k) {
  Hypergraph h = parse_hypergraph(slurp(path));
  SizeLimits limits = SizeLimits::from_env();
  if (k > 0) {
    auto d = exact_hw(h, k, limits);
    if (!d) {
      std::cout << "hw > " << k << "\n";
      return 1;
    }
    std::cout << "hw <= " << k << "\n";
    if (!td_out.empty()) spill(td_out, serialize_td(*d, "hw", Rational(k)));
    return 0;
  }
  long value = exact_hw_value(h, limits);
  std::cout << "hw " << value << "\n";
  if (!td_out.empty()) {
    auto d = exact_hw(h, std::max(1L, value), limits);
    spill(td_out, serialize_td(*d, "hw", Rational(value)));
  }
  return 0;
}

int cmd_subw_bounds(const std::string& path) {
  Hypergraph h = parse_hypergraph(slurp(path));
  auto [lo, hi] = subw_bounds(h, SizeLimits::from_env());
  std::cout << "subw [" << rational_display(lo) << ", " << rational_display(hi) << "]\n";
  return 0;
}

int cmd_core(const std::string& path, std::string out, const std::string& map_out) {
  Structure a = parse_structure(slurp(path));
  CoreResult r = compute_core(a);
  if (out.empty()) out = with_suffix(path, ".core.str");
  spill(out, serialize_structure(r.core));
  if (!map_out.empty()) spill(map_out, serialize_mapping(r.retraction));
  std::cout << "domain size " << r.core.domain.size() << "\n";
  return 0;
}

int cmd_semwidth(const std::string& kind, const std::string& path, std::string core_out,
                 std::string str_out, std::string td_out) {
  Structure a = parse_structure(slurp(path));
  SizeLimits limits = SizeLimits::from_env();
  if (core_out.empty()) core_out = with_suffix(path, ".core.str");
  if (kind == "hw") {
    spill(core_out, serialize_structure(compute_core(a).core));
    SemanticHw r = semantic_hw(a, limits);
    std::cout << "semantic hw " << r.value << "\n";
    if (str_out.empty()) str_out = with_suffix(path, ".shw.str");
    if (td_out.empty()) td_out = with_suffix(path, ".shw.td");
    spill(str_out, serialize_structure(r.structure));
    spill(td_out, serialize_td(r.decomposition, "hw", Rational(r.value)));
    return 0;
  }
  SemanticKind sk = SemanticKind::rho_star;
  if (kind == "fhw") sk = SemanticKind::fhw;
  if (kind == "ghw") sk = SemanticKind::ghw;
  if (kind == "subw-bounds") sk = SemanticKind::subw_bounds;
  SemanticWidth w = semantic_width(a, sk, limits);
  spill(core_out, serialize_structure(w.core));
  if (kind == "subw-bounds") {
    std::cout << "semantic subw [" << rational_display(w.lower) << ", "
              << rational_display(w.upper) << "]\n";
  } else {
    std::cout << "semantic " << kind << " " << rational_display(w.lower) << "\n";
  }
  return 0;
}

int cmd_repair_scv(const std::string& str_path, const std::string& td_path,
                   std::string str_out, std::string td_out) {
  Structure a = parse_structure(slurp(str_path));
  ParsedTd parsed = parse_td(slurp(td_path));
  if (!parsed.covers) {
    throw InvalidDecompositionError("decomposition file has no cover lines");
  }
  CoveredDecomposition d{parsed.td, *parsed.covers};
  ScvRepairResult r = scv_repair(a, d);
  std::cout << "repairs " << r.repairs << "\n";
  if (str_out.empty()) str_out = with_suffix(str_path, ".repaired.str");
  if (td_out.empty()) td_out = with_suffix(td_path, ".repaired.td");
  spill(str_out, serialize_structure(r.structure));
  spill(td_out, serialize_td(r.decomposition, parsed.metric, parsed.value));
  return 0;
}

int cmd_reduce(const std::string& scopes, const std::string& data, const std::string& shape,
               const std::string& ident_path, std::string left_out, std::string right_out) {
  Structure c = parse_structure(slurp(scopes));
  Structure d = parse_structure(slurp(data));
  Structure a = parse_structure(slurp(shape));
  Instance inst = ident_path.empty()
                      ? redh_reduce(c, d, a)
                      : redh_reduce(c, d, a, parse_mapping(slurp(ident_path)));
  if (left_out.empty()) left_out = with_suffix(shape, ".left.str");
  if (right_out.empty()) right_out = with_suffix(shape, ".right.str");
  spill(left_out, serialize_structure(inst.left));
  spill(right_out, serialize_structure(inst.right));
  std::cout << left_out << "\n" << right_out << "\n";
  return 0;
}

int cmd_ucq_nr(const std::string& path, const std::string& out) {
  Ucq nr = make_nonredundant(parse_ucq(slurp(path)));
  if (out.empty()) {
    std::cout << serialize_ucq(nr);
  } else {
    spill(out, serialize_ucq(nr));
    std::cout << "disjuncts " << nr.disjuncts.size() << "\n";
  }
  return 0;
}

int cmd_ucq_eq(const std::string& left, const std::string& right) {
  bool eq = ucq_equivalent(parse_ucq(slurp(left)), parse_ucq(slurp(right)));
  std::cout << (eq ? "equivalent" : "not-equivalent") << "\n";
  return eq ? 0 : 1;
}

int cmd_ucq_solve(const std::string& query, const std::string& data) {
  bool sat = solve_ucq(parse_ucq(slurp(query)), parse_structure(slurp(data)),
                       SizeLimits::from_env());
  std::cout << (sat ? "SAT" : "UNSAT") << "\n";
  return sat ? 0 : 1;
}

int cmd_solve(const std::string& mode, bool no_core, const std::string& a_path,
              const std::string& b_path, const std::string& witness_out) {
  Structure a = parse_structure(slurp(a_path));
  Structure b = parse_structure(slurp(b_path));
  bool sat;
  if (mode == "brute") {
    auto [ok, witness] = solve_bruteforce(a, b);
    sat = ok;
    if (ok && !witness_out.empty()) spill(witness_out, serialize_mapping(*witness));
  } else {
    if (!witness_out.empty()) {
      throw std::runtime_error("--witness requires --mode=brute");
    }
    sat = solve_decomposed(a, b, !no_core, SizeLimits::from_env());
  }
  std::cout << (sat ? "SAT" : "UNSAT") << "\n";
  return sat ? 0 : 1;
}

int cmd_vc(const std::string& path) {
  VcResult r = vc_dimension(parse_hypergraph(slurp(path)));
  std::cout << "vc " << r.vc << "\n";
  std::cout << "witness";
  for (const auto& v : r.witness) std::cout << " " << v;
  std::cout << "\n";
  return 0;
}

int cmd_exotic(const std::string& path, int n) {
  auto w = exotic_witness(parse_hypergraph(slurp(path)), n);
  if (!w) {
    std::cout << "absent\n";
    return 1;
  }
  std::string sep;
  for (const auto& v : *w) {
    std::cout << sep << v;
    sep = " ";
  }
  std::cout << "\n";
  return 0;
}

int cmd_dual(const std::string& path, const std::string& out) {
  Hypergraph d = dual(parse_hypergraph(slurp(path)));
  if (out.empty()) {
    std::cout << serialize_hypergraph(d);
  } else {
    spill(out, serialize_hypergraph(d));
  }
  return 0;
}

int cmd_gaps(const std::string& path) {
  Hypergraph h = parse_hypergraph(slurp(path));
  GapReport g = gap_report(h);
  VcResult vc = vc_dimension(h);
  std::cout << "rho " << g.rho << "\n";
  std::cout << "rho_star " << rational_display(g.rho_star) << "\n";
  std::cout << "tau " << g.tau << "\n";
  std::cout << "tau_star " << rational_display(g.tau_star) << "\n";
  std::cout << "cigap " << rational_display(g.cigap) << "\n";
  std::cout << "tigap_of_dual " << rational_display(g.tigap_of_dual) << "\n";
  std::cout << "vc " << vc.vc << "\n";
  double bound = 1.0;
  if (g.rho_star > 0) {
    bound = std::max(1.0, std::exp2(vc.vc + 2) * std::log2(11.0 * rational_approx(g.rho_star)));
  }
  std::cout << "ding approximate: cigap " << rational_approx(g.cigap) << " <= " << bound
            << "\n";
  return 0;
}

int cmd_gen_grid(int n, const std::string& template_path, const std::string& out) {
  Structure g = parse_structure(slurp(template_path));
  Instance inst = gen_grid_instance(n, g);
  if (out.empty()) {
    std::cout << serialize_structure(inst.left);
  } else {
    spill(out, serialize_structure(inst.left));
  }
  return 0;
}

int cmd_gen_structure(std::uint64_t seed, const RandomStructureParams& params,
                      const std::string& out) {
  Structure s = gen_random_structure(seed, params);
  if (out.empty()) {
    std::cout << serialize_structure(s);
  } else {
    spill(out, serialize_structure(s));
  }
  return 0;
}

int cmd_gen_hypergraph(int vertices, int edges, std::uint64_t seed, const std::string& out) {
  Hypergraph h = gen_random_hypergraph(vertices, edges, seed);
  if (out.empty()) {
    std::cout << serialize_hypergraph(h);
  } else {
    spill(out, serialize_hypergraph(h));
  }
  return 0;
}

int cmd_check(const std::string& suite, std::uint64_t seed, int count) {
  CheckReport r;
  if (suite == "hierarchy") r = check_hierarchy(seed, count);
  else if (suite == "core-minimality") r = check_core_minimality(seed, count);
  else if (suite == "duality") r = check_duality(seed, count);
  else if (suite == "scv-repair") r = check_scv_repair(seed, count);
  else if (suite == "redh") r = check_redh(seed, count);
  else if (suite == "ucq") r = check_ucq(seed, count);
  else if (suite == "solver-agreement") r = check_solver_agreement(seed, count);
  else r = check_pushforward(seed, count);
  std::cout << format_report(r);
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact widths, covers, cores and decomposition-guided solving"};
  app.require_subcommand(1);
  int rc = 0;

  std::string parse_path;
  auto* parse_cmd = app.add_subcommand("parse", "validate a file and print its normal form");
  parse_cmd->add_option("file", parse_path)->required();
  parse_cmd->callback([&] { rc = cmd_parse(parse_path); });

  std::string width_kind, width_path, width_td;
  auto* width_cmd = app.add_subcommand("width", "exact width of a hypergraph");
  width_cmd->add_option("--kind", width_kind)->required()
      ->check(CLI::IsMember({"tw", "ghw", "fhw"}));
  width_cmd->add_option("file", width_path)->required();
  width_cmd->add_option("--td", width_td, "write the witness decomposition");
  width_cmd->callback([&] { rc = cmd_width(width_kind, width_path, width_td); });

  std::string hw_path, hw_td;
  int hw_k = 0;
  auto* hw_cmd = app.add_subcommand("hw", "exact hypertree width");
  hw_cmd->add_option("file", hw_path)->required();
  hw_cmd->add_option("--td", hw_td, "write the witness decomposition");
  hw_cmd->add_option("--k", hw_k, "decide hw <= k instead of computing the optimum");
  hw_cmd->callback([&] { rc = cmd_hw(hw_path, hw_td, hw_k); });

  std::string subw_path;
  auto* subw_cmd = app.add_subcommand("subw-bounds", "submodular width sandwich");
  subw_cmd->add_option("file", subw_path)->required();
  subw_cmd->callback([&] { rc = cmd_subw_bounds(subw_path); });

  std::string core_path, core_out, core_map;
  auto* core_cmd = app.add_subcommand("core", "core of a structure");
  core_cmd->add_option("file", core_path)->required();
  core_cmd->add_option("--out", core_out, "core file (default <file>.core.str)");
  core_cmd->add_option("--map", core_map, "write the retraction");
  core_cmd->callback([&] { rc = cmd_core(core_path, core_out, core_map); });

  std::string sem_kind, sem_path, sem_core, sem_str, sem_td;
  auto* sem_cmd = app.add_subcommand("semwidth", "semantic width through the core");
  sem_cmd->add_option("--kind", sem_kind)->required()
      ->check(CLI::IsMember({"rho-star", "fhw", "ghw", "subw-bounds", "hw"}));
  sem_cmd->add_option("file", sem_path)->required();
  sem_cmd->add_option("--core", sem_core, "core file (default <file>.core.str)");
  sem_cmd->add_option("--out-str", sem_str, "repaired structure for --kind=hw");
  sem_cmd->add_option("--out-td", sem_td, "witness decomposition for --kind=hw");
  sem_cmd->callback([&] { rc = cmd_semwidth(sem_kind, sem_path, sem_core, sem_str, sem_td); });

  std::string rep_str, rep_td, rep_out_str, rep_out_td;
  auto* rep_cmd = app.add_subcommand("repair-scv", "remove special condition violations");
  rep_cmd->add_option("structure", rep_str)->required();
  rep_cmd->add_option("decomposition", rep_td)->required();
  rep_cmd->add_option("--out-str", rep_out_str);
  rep_cmd->add_option("--out-td", rep_out_td);
  rep_cmd->callback([&] { rc = cmd_repair_scv(rep_str, rep_td, rep_out_str, rep_out_td); });

  std::string red_scopes, red_data, red_shape, red_ident, red_left, red_right;
  auto* red_cmd = app.add_subcommand("reduce", "instance reduction over a shape structure");
  red_cmd->add_option("--scopes", red_scopes)->required();
  red_cmd->add_option("--data", red_data)->required();
  red_cmd->add_option("--shape", red_shape)->required();
  red_cmd->add_option("--ident", red_ident, "vertex identification when names differ");
  red_cmd->add_option("--out-left", red_left);
  red_cmd->add_option("--out-right", red_right);
  red_cmd->callback(
      [&] { rc = cmd_reduce(red_scopes, red_data, red_shape, red_ident, red_left, red_right); });

  std::string nr_path, nr_out;
  auto* nr_cmd = app.add_subcommand("ucq-nr", "nonredundant form of a query");
  nr_cmd->add_option("file", nr_path)->required();
  nr_cmd->add_option("--out", nr_out);
  nr_cmd->callback([&] { rc = cmd_ucq_nr(nr_path, nr_out); });

  std::string eq_left, eq_right;
  auto* eq_cmd = app.add_subcommand("ucq-eq", "query equivalence");
  eq_cmd->add_option("left", eq_left)->required();
  eq_cmd->add_option("right", eq_right)->required();
  eq_cmd->callback([&] { rc = cmd_ucq_eq(eq_left, eq_right); });

  std::string us_query, us_data;
  auto* us_cmd = app.add_subcommand("ucq-solve", "evaluate a query on a data structure");
  us_cmd->add_option("query", us_query)->required();
  us_cmd->add_option("data", us_data)->required();
  us_cmd->callback([&] { rc = cmd_ucq_solve(us_query, us_data); });

  std::string so_mode, so_a, so_b, so_witness;
  bool so_no_core = false;
  auto* so_cmd = app.add_subcommand("solve", "decide a single instance");
  so_cmd->add_option("--mode", so_mode)->required()->check(CLI::IsMember({"brute", "decomp"}));
  so_cmd->add_flag("--no-core", so_no_core, "skip the core step in decomp mode");
  so_cmd->add_option("scopes", so_a)->required();
  so_cmd->add_option("data", so_b)->required();
  so_cmd->add_option("--witness", so_witness, "witness file (brute mode)");
  so_cmd->callback([&] { rc = cmd_solve(so_mode, so_no_core, so_a, so_b, so_witness); });

  std::string vc_path;
  auto* vc_cmd = app.add_subcommand("vc", "VC dimension with a shattered witness");
  vc_cmd->add_option("file", vc_path)->required();
  vc_cmd->callback([&] { rc = cmd_vc(vc_path); });

  std::string ex_path;
  int ex_n = 1;
  auto* ex_cmd = app.add_subcommand("exotic", "induced subhypergraph with 2^n-1 edges");
  ex_cmd->add_option("file", ex_path)->required();
  ex_cmd->add_option("--n", ex_n)->required()->check(CLI::PositiveNumber);
  ex_cmd->callback([&] { rc = cmd_exotic(ex_path, ex_n); });

  std::string dual_path, dual_out;
  auto* dual_cmd = app.add_subcommand("dual", "dual of a reduced hypergraph");
  dual_cmd->add_option("file", dual_path)->required();
  dual_cmd->add_option("--out", dual_out);
  dual_cmd->callback([&] { rc = cmd_dual(dual_path, dual_out); });

  std::string gaps_path;
  auto* gaps_cmd = app.add_subcommand("gaps", "cover and transversal integrality gaps");
  gaps_cmd->add_option("file", gaps_path)->required();
  gaps_cmd->callback([&] { rc = cmd_gaps(gaps_path); });

  auto* gen_cmd = app.add_subcommand("gen", "deterministic generators");
  gen_cmd->require_subcommand(1);

  int gg_n = 2;
  std::string gg_template, gg_out;
  auto* gg_cmd = gen_cmd->add_subcommand("grid", "grid scope structure over a template");
  gg_cmd->add_option("n", gg_n)->required()->check(CLI::PositiveNumber);
  gg_cmd->add_option("template", gg_template)->required();
  gg_cmd->add_option("--out", gg_out);
  gg_cmd->callback([&] { rc = cmd_gen_grid(gg_n, gg_template, gg_out); });

  std::uint64_t gs_seed = 0;
  RandomStructureParams gs_params;
  std::string gs_out;
  auto* gs_cmd = gen_cmd->add_subcommand("random-structure", "seeded random structure");
  gs_cmd->add_option("--seed", gs_seed)->required();
  gs_cmd->add_option("--min-elements", gs_params.min_elements);
  gs_cmd->add_option("--max-elements", gs_params.max_elements);
  gs_cmd->add_option("--min-relations", gs_params.min_relations);
  gs_cmd->add_option("--max-relations", gs_params.max_relations);
  gs_cmd->add_option("--max-arity", gs_params.max_arity);
  gs_cmd->add_option("--density", gs_params.density_percent);
  gs_cmd->add_option("--out", gs_out);
  gs_cmd->callback([&] { rc = cmd_gen_structure(gs_seed, gs_params, gs_out); });

  int gh_vertices = 4, gh_edges = 4;
  std::uint64_t gh_seed = 0;
  std::string gh_out;
  auto* gh_cmd = gen_cmd->add_subcommand("random-hypergraph", "seeded random hypergraph");
  gh_cmd->add_option("--vertices", gh_vertices)->required()->check(CLI::PositiveNumber);
  gh_cmd->add_option("--edges", gh_edges)->required()->check(CLI::PositiveNumber);
  gh_cmd->add_option("--seed", gh_seed)->required();
  gh_cmd->add_option("--out", gh_out);
  gh_cmd->callback([&] { rc = cmd_gen_hypergraph(gh_vertices, gh_edges, gh_seed, gh_out); });

  std::string ck_suite;
  std::uint64_t ck_seed = 1;
  int ck_count = 50;
  auto* ck_cmd = app.add_subcommand("check", "property suites over seeded pools");
  ck_cmd->add_option("suite", ck_suite)->required()
      ->check(CLI::IsMember({"hierarchy", "core-minimality", "duality", "scv-repair", "redh",
                             "ucq", "solver-agreement", "pushforward"}));
  ck_cmd->add_option("--seed", ck_seed);
  ck_cmd->add_option("--count", ck_count);
  ck_cmd->callback([&] { rc = cmd_check(ck_suite, ck_seed, ck_count); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
