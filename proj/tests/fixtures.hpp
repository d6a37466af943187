#pragma once

#include <vector>

#include "minfact/perm.hpp"

namespace minfact::testing {

// The size-12 factorization drawn next to its forest and partition for k = 6.
inline std::vector<Transposition> example_factorization() {
  return {{1, 3}, {6, 12}, {1, 5}, {7, 12}, {9, 10}, {11, 12}, {2, 3}, {4, 5}, {1, 6}, {8, 11}, {9, 11}};
}

inline std::vector<std::vector<int>> example_blocks() { return {{1, 3, 5}, {2}, {4}, {6, 7, 11, 12}, {8}, {9, 10}}; }

// Dual tree of example_blocks(), parents in preorder.
inline std::vector<int> example_dual_parents() { return {-1, 0, 1, 2, 3, 2, 5, 0, 0, 8, 8, 10, 0}; }

// The tree drawn for the Phi bijection, parents in preorder.
inline std::vector<int> phi_example_parents() { return {-1, 0, 1, 2, 3, 4, 2, 6, 0, 0, 9, 9, 11, 0}; }

}  // namespace minfact::testing
