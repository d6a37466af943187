#pragma once

#include <vector>

#include "minfact/perm.hpp"

namespace minfact {

// O(n) stack scan. Throws std::invalid_argument if p is not a partition of [n].
bool is_noncrossing(const SetPartition& p);

class NonCrossingPartition {
 public:
  NonCrossingPartition() = default;
  // Validates and canonicalizes; throws std::invalid_argument on a crossing.
  explicit NonCrossingPartition(SetPartition p);
  NonCrossingPartition(int n, std::vector<std::vector<int>> blocks);

  static NonCrossingPartition singletons(int n);
  static NonCrossingPartition full(int n);

  int n() const { return p_.n; }
  const std::vector<std::vector<int>>& blocks() const { return p_.blocks; }
  int block_count() const { return static_cast<int>(p_.blocks.size()); }
  const SetPartition& partition() const { return p_; }
  // Index of the block containing each element; entry 0 unused.
  std::vector<int> block_index() const;

  bool operator==(const NonCrossingPartition&) const = default;
  auto operator<=>(const NonCrossingPartition&) const = default;

 private:
  SetPartition p_;
};

Permutation geodesic_perm_of(const NonCrossingPartition& p);
NonCrossingPartition kreweras(const NonCrossingPartition& p);
NonCrossingPartition rotate(const NonCrossingPartition& p, int j);

}  // namespace minfact
