#include <doctest.h>

#include <stdexcept>

#include "minfact/ncp.hpp"
#include "minfact/offspring.hpp"
#include "minfact/oracle.hpp"
#include "minfact/verify.hpp"

using namespace minfact;
using oracle::Integer;
using oracle::Rational;

TEST_CASE("factorization counts") {
  CHECK(oracle::enumerate_factorizations(1).size() == 1);
  CHECK(oracle::enumerate_factorizations(3).size() == 3);
  CHECK(oracle::enumerate_factorizations(4).size() == 16);
  CHECK(oracle::enumerate_factorizations(5).size() == 125);
  CHECK_THROWS_AS(oracle::enumerate_factorizations(9), std::invalid_argument);
  for (const auto& f : oracle::enumerate_factorizations(5)) CHECK(is_minimal_factorization(5, f.factors()));
}

TEST_CASE("exact partial-product law for n = 3") {
  const auto law = oracle::exact_law_partial_product(3, 1);
  CHECK(law.size() == 3);
  for (const auto& [p, q] : law) {
    CHECK(q == Rational(1, 3));
    CHECK(oracle::formula_partial_product(p, 1) == Rational(1, 3));
  }
  CHECK(law.at(NonCrossingPartition(3, {{1, 2}, {3}})) == Rational(1, 3));
}

TEST_CASE("block weights") {
  CHECK(oracle::block_weight(1) == 1);
  CHECK(oracle::block_weight(2) == 1);
  CHECK(oracle::block_weight(3) == Rational(3, 2));
  CHECK(oracle::block_weight(4) == Rational(16, 6));
}

TEST_CASE("minimal factorizations of a permutation") {
  const auto s = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
  CHECK(oracle::count_minfacts_of_perm(s) == 2);
  CHECK(oracle::formula_minfacts_of_perm(s) == 2);
  CHECK(oracle::count_minfacts_of_perm(Permutation::identity(4)) == 1);
  CHECK(oracle::count_minfacts_of_perm(Permutation::long_cycle(4)) == 16);
  CHECK(oracle::formula_minfacts_of_perm(Permutation::long_cycle(4)) == 16);
}

TEST_CASE("tree enumeration") {
  auto exact = [](int nb, int nw, bool white_root) {
    int count = 0;
    for (const auto& t : oracle::enumerate_trees(nb, nw, white_root)) {
      const int b = white_root ? t.white_count() : t.black_count();
      const int w = white_root ? t.black_count() : t.white_count();
      count += b == nb && w == nw;
    }
    return count;
  };
  CHECK(exact(1, 1, false) == 1);
  CHECK(exact(2, 1, false) == 1);
  CHECK(exact(1, 3, false) == 1);
  // Black root with 3 black and 2 white vertices.
  CHECK(exact(3, 2, false) == 6);
  CHECK(oracle::enumerate_plane_trees(5).size() == 1 + 1 + 2 + 5 + 14);
}

TEST_CASE("given-number formulas and walk identities") {
  const auto black = solve_params(4.0 / 7.0), white = solve_params(7.0 / 4.0);
  const auto trees = oracle::check_given_number_formulas(black, white, 5);
  CHECK(trees.pass());
  CHECK(trees.checked > 0);
  const auto walks = oracle::check_walk_identities(black, white, 5);
  CHECK(walks.pass());
  CHECK(walks.checked > 0);
}

TEST_CASE("exact Kreweras symmetry of partial-product laws") {
  CHECK(verify::run_suite("symmetry").pass);
}

TEST_CASE("verification suites") {
  CHECK_THROWS_AS(verify::run_suite("nope"), std::invalid_argument);
  for (const char* name : {"counts", "lawproduct", "marginals", "symmetry", "bijections", "bgw-formulas",
                           "llt-diagnostic", "hausdorff"}) {
    bool found = false;
    for (const auto& s : verify::suites()) found = found || s.name == name;
    CHECK(found);
  }
  for (int c = 1; c <= 11; ++c) CHECK_NOTHROW(verify::suite_for_criterion(c));
  verify::Options o;
  o.n = 5;
  CHECK(verify::run_suite("lawproduct", o).pass);
}
