#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace minfact {

// Partition of [n]; blocks sorted internally and ordered by minimum.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  void canonicalize();
  bool operator==(const SetPartition&) const = default;
  auto operator<=>(const SetPartition&) const = default;
  std::string to_string() const;
};

// Throws std::invalid_argument unless p is a partition of [p.n].
void check_partition(const SetPartition& p);

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  static Permutation long_cycle(int n);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  int cycle_count() const;
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

struct Transposition {
  int a = 1;
  int b = 2;

  Transposition() = default;
  Transposition(int x, int y);

  bool operator==(const Transposition&) const = default;
  auto operator<=>(const Transposition&) const = default;
};

// Left-to-right product: apply sigma first, then tau.
Permutation compose_ltr(const Permutation& sigma, const Permutation& tau);
Permutation as_permutation(const Transposition& t, int n);

SetPartition cycle_partition(const Permutation& sigma);

bool is_minimal_factorization(int n, std::span<const Transposition> factors);

class Factorization {
 public:
  Factorization() = default;
  Factorization(int n, std::vector<Transposition> factors);

  int n() const { return n_; }
  const std::vector<Transposition>& factors() const { return factors_; }
  bool operator==(const Factorization&) const = default;
  auto operator<=>(const Factorization&) const = default;

 private:
  int n_ = 1;
  std::vector<Transposition> factors_;
};

// Product of the first k factors, O(n + k).
Permutation partial_product(const Factorization& f, int k);
Permutation product_of(int n, std::span<const Transposition> factors);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace minfact
