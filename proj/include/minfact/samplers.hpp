#pragma once

#include <vector>

#include "minfact/ncp.hpp"
#include "minfact/path_codec.hpp"
#include "minfact/perm.hpp"
#include "minfact/rng.hpp"
#include "minfact/tree.hpp"

namespace minfact {

// Gap i = b - a of the first factor of a uniform element of M_m.
int sample_first_gap(int m, RngStream& rng);
// Natural log of P(gap = i) for the first factor over M_m.
double log_first_gap_prob(int m, int i);
Transposition sample_first_transposition(int n, RngStream& rng);

// Exactly uniform over the minimal factorizations of (1, ..., n).
Factorization sample_min_factorization(int n, RngStream& rng);

// N i.i.d. draws from any law of the offspring family conditioned on summing to s.
std::vector<int> sample_conditioned_counts(long long N, long long s, RngStream& rng);

// (H, W) code of the bi-conditioned alternating tree with n-K black and K+1 white vertices.
PhiCode sample_conditioned_code(int n, int K, bool root_shifted, RngStream& rng);
BiTypeTree sample_conditioned_tree(int n, int K, bool root_shifted, RngStream& rng);
// (H, B) bridge before the cyclic shift (root law not shifted).
PathPair sample_hb_bridge(int n, int K, RngStream& rng);

NonCrossingPartition partial_product_partition(const Factorization& f, int k);
std::vector<Transposition> forest_edges(const Factorization& f, int k);

}  // namespace minfact
