#pragma once

#include <vector>

#include "minfact/ncp.hpp"

namespace minfact {

// Rooted plane tree stored as a parent array in depth-first (preorder) order.
// Vertices at even depth are black, at odd depth white.
class PlaneTree {
 public:
  PlaneTree();
  // parents[0] == -1; parents must describe a preorder listing.
  explicit PlaneTree(std::vector<int> parents);
  // Children counts listed in preorder (the Lukasiewicz word).
  static PlaneTree from_child_counts(const std::vector<int>& counts);

  int size() const { return static_cast<int>(parent_.size()); }
  int edges() const { return size() - 1; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  int depth(int v) const { return depth_[static_cast<std::size_t>(v)]; }
  bool is_black(int v) const { return depth(v) % 2 == 0; }
  int child_count(int v) const;
  int child(int v, int j) const { return child_[static_cast<std::size_t>(child_start_[static_cast<std::size_t>(v)] + j)]; }
  // Number of strict descendants.
  int descendants(int v) const { return subtree_[static_cast<std::size_t>(v)] - 1; }

  const std::vector<int>& parents() const { return parent_; }
  std::vector<int> child_counts() const;
  // Black vertex ids in lexicographic (preorder) order; rank is the inverse.
  const std::vector<int>& black_vertices() const { return black_; }
  int black_rank(int v) const { return black_rank_[static_cast<std::size_t>(v)]; }
  int black_count() const { return static_cast<int>(black_.size()); }
  int white_count() const { return size() - black_count(); }

  bool operator==(const PlaneTree& o) const { return parent_ == o.parent_; }
  bool operator<(const PlaneTree& o) const { return parent_ < o.parent_; }

 private:
  std::vector<int> parent_, depth_, child_start_, child_, subtree_, black_, black_rank_;
};

using BiTypeTree = PlaneTree;

struct CornerLabeling {
  // labels[r] = labels of the r-th black vertex (lexicographic rank), in contour order.
  std::vector<std::vector<int>> labels;
};

std::vector<int> contour_sequence(const PlaneTree& t);
CornerLabeling corner_labels(const BiTypeTree& t);

BiTypeTree dual_tree(const NonCrossingPartition& p);
NonCrossingPartition partition_of_tree(const BiTypeTree& t);

struct LabelBounds {
  int x = 0;              // first black-corner label
  int y = 0;              // last black-corner label
  int ell = 0;            // black corners on the ancestral line branching to the right
  int black_desc = 0;     // black descendants
  int desc = 0;           // all descendants
};

// i is the lexicographic rank of a non-root black vertex.
LabelBounds block_label_bounds(const BiTypeTree& t, int i);

PlaneTree reduced_black_subtree(const BiTypeTree& t);

// Values B_1..B_N with B_k = sum_{l<=k} (k_l - 1) over preorder.
std::vector<long long> lukasiewicz_path(const PlaneTree& t);

}  // namespace minfact
