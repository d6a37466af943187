#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "minfact/ncp.hpp"
#include "minfact/offspring.hpp"
#include "minfact/perm.hpp"
#include "minfact/tree.hpp"

namespace minfact::oracle {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Visits every minimal factorization of (1..n) in lexicographic order of factors.
void for_each_factorization(int n, const std::function<void(const std::vector<Transposition>&)>& visit);
std::vector<Factorization> enumerate_factorizations(int n);

std::vector<NonCrossingPartition> enumerate_noncrossing_partitions(int n);
// O(n^4) quadruple scan, independent of the stack test.
bool is_noncrossing_quadruple(const SetPartition& p);

// |B|^(|B|-2) / (|B|-1)!
Rational block_weight(int size);
Rational formula_partial_product(const NonCrossingPartition& p, int k);
std::map<NonCrossingPartition, Rational> exact_law_partial_product(int n, int k);

Integer count_minfacts_of_perm(const Permutation& sigma);
Integer formula_minfacts_of_perm(const Permutation& sigma);

Rational formula_first_factor(int n, const Transposition& t);

// Plane trees with at most max_vertices vertices.
std::vector<PlaneTree> enumerate_plane_trees(int max_vertices);
// Alternating trees with a black (or white) root within the color bounds.
std::vector<BiTypeTree> enumerate_trees(int n_black_max, int n_white_max, bool white_root = false);

// Every n-element permutation.
std::vector<Permutation> all_permutations(int n);

struct FormulaCheck {
  std::string name;
  std::vector<int> index;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct FormulaReport {
  int checked = 0;
  double max_error = 0.0;
  double tail_mass = 0.0;
  std::vector<FormulaCheck> failures;
  bool pass() const { return failures.empty(); }
};

// Convolution of truncated pmfs: P(S_N = k) for k <= kmax.
std::vector<double> convolution_walk(const OffspringParams& p, int N, int kmax);

// Tree-enumeration checks of the given-number formulas for alternating trees
// and forests, with all indices up to `bound`.
FormulaReport check_given_number_formulas(const OffspringParams& black, const OffspringParams& white,
                                          int bound = 6, double tol = 1e-10);
// Walk-side identities: excursion/bridge relations and the decoupling identity.
FormulaReport check_walk_identities(const OffspringParams& black, const OffspringParams& white,
                                    int bound = 6, double tol = 1e-10);

}  // namespace minfact::oracle
