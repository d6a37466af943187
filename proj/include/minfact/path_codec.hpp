#pragma once

#include <string>
#include <utility>
#include <vector>

#include "minfact/tree.hpp"

namespace minfact {

struct PathPair {
  std::vector<std::pair<long long, long long>> pairs;  // (h_i, b_i)

  std::size_t size() const { return pairs.size(); }
  std::vector<long long> h_bar() const;  // H_1..H_m
  std::vector<long long> b_bar() const;  // sum b - i, i = 1..m
  bool operator==(const PathPair&) const = default;
};

struct PhiCode {
  std::vector<int> H;
  std::vector<int> W;
  bool operator==(const PhiCode&) const = default;
};

// Empty string when the code lies in the valid set, else the failed condition.
std::string phi_violation(const PhiCode& code);

PhiCode encode_phi(const BiTypeTree& t);
// Throws std::invalid_argument naming the failed condition.
BiTypeTree decode_phi(const PhiCode& code);

PathPair hb_paths(const BiTypeTree& t);

// Rotate left by i (taken modulo the length).
PathPair cyclic_shift(const PathPair& p, long long i);

// First index j in 1..m attaining the minimum of the prefix sums of x.
std::size_t first_minimum_index(const std::vector<long long>& increments);

// Throws std::invalid_argument unless sum b - m == -1.
PathPair vervaat_discrete(const PathPair& p);

// Shifts r in [0, N) whose rotation first reaches -s at the last step, for
// increments >= -1 summing to -s. Exactly s values.
std::vector<std::size_t> forest_good_shifts(const std::vector<long long>& increments);

// Pairs (i, j), 1-based: j is the first k > i with path_k = path_i - 1.
std::vector<std::pair<int, int>> chords_from_discrete_path(const std::vector<long long>& path);

}  // namespace minfact
