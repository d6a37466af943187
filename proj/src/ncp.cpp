#include "minfact/ncp.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace minfact {

bool is_noncrossing(const SetPartition& p) {
  check_partition(p);
  const auto n = static_cast<std::size_t>(p.n);
  std::vector<int> block_of(n + 1), first(p.blocks.size()), last(p.blocks.size());
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    int lo = p.blocks[b].front(), hi = p.blocks[b].front();
    for (int x : p.blocks[b]) {
      block_of[static_cast<std::size_t>(x)] = static_cast<int>(b);
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    first[b] = lo;
    last[b] = hi;
  }
  std::vector<int> open;
  for (int x = 1; x <= p.n; ++x) {
    int b = block_of[static_cast<std::size_t>(x)];
    auto bi = static_cast<std::size_t>(b);
    if (x == first[bi]) {
      if (x != last[bi]) open.push_back(b);
      continue;
    }
    if (open.empty() || open.back() != b) return false;
    if (x == last[bi]) open.pop_back();
  }
  return true;
}

NonCrossingPartition::NonCrossingPartition(SetPartition p) : p_(std::move(p)) {
  if (!is_noncrossing(p_)) throw std::invalid_argument("partition is crossing");
  p_.canonicalize();
}

NonCrossingPartition::NonCrossingPartition(int n, std::vector<std::vector<int>> blocks)
    : NonCrossingPartition(SetPartition{n, std::move(blocks)}) {}

NonCrossingPartition NonCrossingPartition::singletons(int n) {
  SetPartition p{n, {}};
  for (int i = 1; i <= n; ++i) p.blocks.push_back({i});
  return NonCrossingPartition(std::move(p));
}

NonCrossingPartition NonCrossingPartition::full(int n) {
  SetPartition p{n, {}};
  if (n > 0) {
    p.blocks.emplace_back();
    for (int i = 1; i <= n; ++i) p.blocks[0].push_back(i);
  }
  return NonCrossingPartition(std::move(p));
}

std::vector<int> NonCrossingPartition::block_index() const {
  std::vector<int> idx(static_cast<std::size_t>(n()) + 1, -1);
  for (std::size_t b = 0; b < p_.blocks.size(); ++b)
    for (int x : p_.blocks[b]) idx[static_cast<std::size_t>(x)] = static_cast<int>(b);
  return idx;
}

Permutation geodesic_perm_of(const NonCrossingPartition& p) {
  return Permutation::from_cycles(p.n(), p.blocks());
}

NonCrossingPartition kreweras(const NonCrossingPartition& p) {
  if (p.n() == 0) return p;
  Permutation sigma = geodesic_perm_of(p);
  Permutation k = compose_ltr(Permutation::long_cycle(p.n()), sigma.inverse());
  return NonCrossingPartition(cycle_partition(k));
}

NonCrossingPartition rotate(const NonCrossingPartition& p, int j) {
  const int n = p.n();
  if (n == 0) return p;
  int shift = ((j % n) + n) % n;
  SetPartition q{n, p.blocks()};
  for (auto& b : q.blocks)
    for (int& x : b) x = (x - 1 + shift) % n + 1;
  return NonCrossingPartition(std::move(q));
}

}  // namespace minfact
