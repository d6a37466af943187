#include "minfact/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace minfact {

PlaneTree::PlaneTree() : PlaneTree(std::vector<int>{-1}) {}

PlaneTree::PlaneTree(std::vector<int> parents) : parent_(std::move(parents)) {
  const std::size_t n = parent_.size();
  if (n == 0 || parent_[0] != -1) throw std::invalid_argument("tree: parents[0] must be -1");
  depth_.assign(n, 0);
  std::vector<int> path{0};
  std::vector<int> counts(n, 0);
  for (std::size_t v = 1; v < n; ++v) {
    int p = parent_[v];
    while (!path.empty() && path.back() != p) path.pop_back();
    if (path.empty()) throw std::invalid_argument("tree: parent array is not in preorder");
    depth_[v] = depth_[static_cast<std::size_t>(p)] + 1;
    ++counts[static_cast<std::size_t>(p)];
    path.push_back(static_cast<int>(v));
  }
  child_start_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) child_start_[v + 1] = child_start_[v] + counts[v];
  child_.assign(n - 1, 0);
  std::vector<int> fill(child_start_.begin(), child_start_.end() - 1);
  for (std::size_t v = 1; v < n; ++v)
    child_[static_cast<std::size_t>(fill[static_cast<std::size_t>(parent_[v])]++)] = static_cast<int>(v);
  subtree_.assign(n, 1);
  for (std::size_t v = n - 1; v >= 1; --v)
    subtree_[static_cast<std::size_t>(parent_[v])] += subtree_[v];
  black_rank_.assign(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (depth_[v] % 2 == 0) {
      black_rank_[v] = static_cast<int>(black_.size());
      black_.push_back(static_cast<int>(v));
    }
  }
}

PlaneTree PlaneTree::from_child_counts(const std::vector<int>& counts) {
  if (counts.empty()) throw std::invalid_argument("tree: empty child-count word");
  std::vector<int> parents{-1};
  std::vector<std::pair<int, int>> open;  // (vertex, children still to attach)
  if (counts[0] < 0) throw std::invalid_argument("tree: negative child count");
  if (counts[0] > 0) open.emplace_back(0, counts[0]);
  for (std::size_t v = 1; v < counts.size(); ++v) {
    if (open.empty()) throw std::invalid_argument("tree: child-count word ends early");
    if (counts[v] < 0) throw std::invalid_argument("tree: negative child count");
    parents.push_back(open.back().first);
    if (--open.back().second == 0) open.pop_back();
    if (counts[v] > 0) open.emplace_back(static_cast<int>(v), counts[v]);
  }
  if (!open.empty()) throw std::invalid_argument("tree: child-count word is incomplete");
  return PlaneTree(std::move(parents));
}

int PlaneTree::child_count(int v) const {
  auto i = static_cast<std::size_t>(v);
  return child_start_[i + 1] - child_start_[i];
}

std::vector<int> PlaneTree::child_counts() const {
  std::vector<int> c(parent_.size());
  for (int v = 0; v < size(); ++v) c[static_cast<std::size_t>(v)] = child_count(v);
  return c;
}

std::vector<int> contour_sequence(const PlaneTree& t) {
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(2 * t.edges() + 1));
  std::vector<std::pair<int, int>> stack{{0, 0}};
  seq.push_back(0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < t.child_count(v)) {
      int c = t.child(v, next++);
      stack.emplace_back(c, 0);
      seq.push_back(c);
    } else {
      stack.pop_back();
      if (!stack.empty()) seq.push_back(stack.back().first);
    }
  }
  return seq;
}

CornerLabeling corner_labels(const BiTypeTree& t) {
  CornerLabeling out;
  out.labels.resize(static_cast<std::size_t>(t.black_count()));
  auto seq = contour_sequence(t);
  int label = 0;
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (t.is_black(seq[i]))
      out.labels[static_cast<std::size_t>(t.black_rank(seq[i]))].push_back(++label);
  return out;
}

BiTypeTree dual_tree(const NonCrossingPartition& p) {
  const int n = p.n();
  if (n == 0) return BiTypeTree();
  const int nb = p.block_count();
  auto black_of = p.block_index();
  auto white_of = kreweras(p).block_index();
  // Contour as block ids: B(n), W(n), B(1), W(1), ..., B(n-1), W(n-1), B(n).
  // Black ids are block indices; white ids are offset by nb.
  auto B = [&](int j) { return black_of[static_cast<std::size_t>(j)]; };
  auto W = [&](int j) { return nb + white_of[static_cast<std::size_t>(j)]; };
  std::vector<int> parents{-1};
  std::vector<int> stack_ids{B(n)}, stack_vertices{0};
  auto step = [&](int id) {
    if (stack_ids.size() >= 2 && stack_ids[stack_ids.size() - 2] == id) {
      stack_ids.pop_back();
      stack_vertices.pop_back();
      return;
    }
    int v = static_cast<int>(parents.size());
    parents.push_back(stack_vertices.back());
    stack_ids.push_back(id);
    stack_vertices.push_back(v);
  };
  for (int j = 1; j <= n; ++j) {
    step(W(j == 1 ? n : j - 1));
    step(B(j));
  }
  if (stack_ids.size() != 1 || static_cast<int>(parents.size()) != n + 1)
    throw std::logic_error("dual_tree: inconsistent contour");
  return BiTypeTree(std::move(parents));
}

NonCrossingPartition partition_of_tree(const BiTypeTree& t) {
  auto cl = corner_labels(t);
  SetPartition p{t.edges(), {}};
  for (auto& b : cl.labels)
    if (!b.empty()) p.blocks.push_back(b);
  return NonCrossingPartition(std::move(p));
}

LabelBounds block_label_bounds(const BiTypeTree& t, int i) {
  if (i <= 0 || i >= t.black_count())
    throw std::out_of_range("block_label_bounds: need 0 < i < black count");
  auto cl = corner_labels(t);
  const int v = t.black_vertices()[static_cast<std::size_t>(i)];
  LabelBounds r;
  const auto& own = cl.labels[static_cast<std::size_t>(i)];
  r.x = own.front();
  r.y = own.back();
  r.desc = t.descendants(v);
  for (int u = t.parent(v); u >= 0; u = t.parent(u)) {
    if (!t.is_black(u)) continue;
    for (int lab : cl.labels[static_cast<std::size_t>(t.black_rank(u))])
      if (lab > r.x) ++r.ell;
  }
  const int last = v + t.descendants(v);
  for (int w = v + 1; w <= last; ++w)
    if (t.is_black(w)) ++r.black_desc;
  return r;
}

PlaneTree reduced_black_subtree(const BiTypeTree& t) {
  std::vector<int> parents;
  parents.reserve(static_cast<std::size_t>(t.black_count()));
  for (int v : t.black_vertices())
    parents.push_back(v == 0 ? -1 : t.black_rank(t.parent(t.parent(v))));
  return PlaneTree(std::move(parents));
}

std::vector<long long> lukasiewicz_path(const PlaneTree& t) {
  std::vector<long long> path(static_cast<std::size_t>(t.size()));
  long long s = 0;
  for (int v = 0; v < t.size(); ++v) {
    s += t.child_count(v) - 1;
    path[static_cast<std::size_t>(v)] = s;
  }
  return path;
}

}  // namespace minfact
