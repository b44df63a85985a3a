#include <doctest.h>

#include "semwidth/errors.hpp"
#include "semwidth/gen.hpp"
#include "semwidth/hom.hpp"
#include "semwidth/model.hpp"
#include "semwidth/solver.hpp"

#include <random>

using namespace semwidth;

namespace {

Structure str(const std::string& text) { return parse_structure(text); }
Structure k2() { return str("E(c0,c1).\nE(c1,c0).\n"); }
Structure cyc3() { return str("E(a,b).\nE(b,c).\nE(c,a).\n"); }

}  // namespace

TEST_CASE("brute force finds grid colorings and rejects odd cycles") {
  for (int n = 1; n <= 3; ++n) {
    Instance inst = gen_grid_instance(n, k2());
    auto [sat, witness] = solve_bruteforce(inst.left, inst.right);
    CHECK(sat);
    REQUIRE(witness.has_value());
    CHECK(is_homomorphism(inst.left, inst.right, *witness));
  }
  CHECK_FALSE(solve_bruteforce(cyc3(), k2()).first);
  CHECK(solve_bruteforce(cyc3(), cyc3()).first);
  CHECK(solve_bruteforce(cyc3(), str("E(0,0).\n")).first);
}

TEST_CASE("edge cases around empty structures") {
  Structure empty_pattern;
  empty_pattern.signature = k2().signature;
  CHECK(solve_bruteforce(empty_pattern, k2()).first);
  CHECK(solve_bruteforce(empty_pattern, k2()).second == Mapping{});
  CHECK(solve_decomposed(empty_pattern, k2(), true));
  CHECK(solve_decomposed(empty_pattern, k2(), false));

  Structure empty_target;
  empty_target.signature = k2().signature;
  CHECK_FALSE(solve_bruteforce(cyc3(), empty_target).first);
  CHECK_FALSE(solve_decomposed(cyc3(), empty_target, false));

  Structure bare;
  bare.signature = k2().signature;
  bare.domain = {"0"};
  CHECK_FALSE(solve_bruteforce(str("E(x,y).\n"), bare).first);
  CHECK_FALSE(solve_decomposed(str("E(x,y).\n"), bare, true));

  CHECK_THROWS_AS(solve_bruteforce(str("E(x,y).\n"), str("F(0,1).\n")),
                  SignatureMismatchError);
  CHECK_THROWS_AS(solve_decomposed(str("E(x,y).\n"), str("F(0,1).\n"), false),
                  SignatureMismatchError);
}

TEST_CASE("coring shrinks grid scopes to a single tiny bag") {
  Instance inst = gen_grid_instance(3, k2());
  SolveStats stats;
  CHECK(solve_decomposed(inst.left, inst.right, true, {}, &stats));
  CHECK(stats.bag_count == 1);
  CHECK(stats.decomposition_width == 1);
  CHECK(stats.max_cover_size == 1);
  long d = static_cast<long>(inst.right.domain.size());
  CHECK(stats.max_bag_rows <= d * d);
  CHECK(stats.semijoin_monotone);
}

TEST_CASE("decomposed solving without coring walks the full scope") {
  Instance inst = gen_grid_instance(3, k2());
  SolveStats stats;
  CHECK(solve_decomposed(inst.left, inst.right, false, {}, &stats));
  CHECK(stats.bag_count >= 1);
  CHECK(stats.decomposition_width >= 1);
  CHECK(stats.max_cover_size <= 3);
  CHECK(stats.semijoin_monotone);

  CHECK_FALSE(solve_decomposed(cyc3(), k2(), false));
  CHECK_FALSE(solve_decomposed(cyc3(), k2(), true));
  CHECK(solve_decomposed(cyc3(), cyc3(), false));
  CHECK(solve_decomposed(cyc3(), cyc3(), true));
}

TEST_CASE("both solvers agree across a random pool") {
  std::mt19937_64 rng(90210);
  for (int i = 0; i < 30; ++i) {
    RandomStructureParams pp;
    pp.max_elements = 5;
    pp.density_percent = 30;
    Structure a = gen_random_structure(rng(), pp);
    Structure b = gen_random_structure_over(a.signature, 2 + static_cast<int>(rng() % 3),
                                            40, rng());
    bool brute = solve_bruteforce(a, b).first;
    SolveStats stats;
    CHECK(solve_decomposed(a, b, false, {}, &stats) == brute);
    CHECK(solve_decomposed(a, b, true) == brute);
    CHECK(stats.semijoin_monotone);
  }
}
