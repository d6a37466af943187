#include "minfact/path_codec.hpp"

#include <numeric>
#include <stdexcept>

namespace minfact {

std::vector<long long> PathPair::h_bar() const {
  std::vector<long long> out(pairs.size());
  long long s = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) out[i] = s += pairs[i].first;
  return out;
}

std::vector<long long> PathPair::b_bar() const {
  std::vector<long long> out(pairs.size());
  long long s = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) out[i] = s += pairs[i].second - 1;
  return out;
}

std::string phi_violation(const PhiCode& code) {
  if (code.H.empty()) return "H is empty";
  for (int h : code.H)
    if (h < 0) return "negative entry in H";
  for (int w : code.W)
    if (w < 0) return "negative entry in W";
  long long sh = std::accumulate(code.H.begin(), code.H.end(), 0LL);
  long long sw = std::accumulate(code.W.begin(), code.W.end(), 0LL);
  if (sh != static_cast<long long>(code.W.size())) return "sum of H differs from |W|";
  if (sw != static_cast<long long>(code.H.size()) - 1) return "sum of W differs from |H|-1";
  // w_1 + ... + w_{hbar_i} >= i for 1 <= i <= |H|-1.
  long long hbar = 0, wsum = 0;
  std::size_t consumed = 0;
  for (std::size_t i = 1; i < code.H.size(); ++i) {
    hbar += code.H[i - 1];
    while (consumed < static_cast<std::size_t>(hbar)) wsum += code.W[consumed++];
    if (wsum < static_cast<long long>(i)) return "prefix domination fails at i=" + std::to_string(i);
  }
  return {};
}

PhiCode encode_phi(const BiTypeTree& t) {
  PhiCode code;
  for (int v : t.black_vertices()) {
    code.H.push_back(t.child_count(v));
    for (int j = 0; j < t.child_count(v); ++j) code.W.push_back(t.child_count(t.child(v, j)));
  }
  return code;
}

BiTypeTree decode_phi(const PhiCode& code) {
  if (auto err = phi_violation(code); !err.empty())
    throw std::invalid_argument("decode_phi: " + err);
  std::vector<std::size_t> start(code.H.size() + 1, 0);
  for (std::size_t i = 0; i < code.H.size(); ++i)
    start[i + 1] = start[i] + static_cast<std::size_t>(code.H[i]);

  struct Frame {
    int vertex;
    bool black;
    std::size_t next;  // black: next W index; white: children emitted
    std::size_t end;   // black: end W index; white: child count
  };
  std::vector<int> parents{-1};
  std::size_t next_rank = 1;
  std::vector<Frame> stack{{0, true, start[0], start[1]}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == f.end) {
      stack.pop_back();
      continue;
    }
    int v = static_cast<int>(parents.size());
    parents.push_back(f.vertex);
    if (f.black) {
      auto w = static_cast<std::size_t>(code.W[f.next++]);
      stack.push_back({v, false, 0, w});
    } else {
      ++f.next;
      if (next_rank >= code.H.size()) throw std::invalid_argument("decode_phi: ran out of black vertices");
      std::size_t r = next_rank++;
      stack.push_back({v, true, start[r], start[r + 1]});
    }
  }
  if (next_rank != code.H.size()) throw std::invalid_argument("decode_phi: unused black vertices");
  return BiTypeTree(std::move(parents));
}

PathPair hb_paths(const BiTypeTree& t) {
  PathPair p;
  for (int v : t.black_vertices()) {
    long long b = 0;
    for (int j = 0; j < t.child_count(v); ++j) b += t.child_count(t.child(v, j));
    p.pairs.emplace_back(t.child_count(v), b);
  }
  return p;
}

PathPair cyclic_shift(const PathPair& p, long long i) {
  PathPair q;
  const auto m = static_cast<long long>(p.size());
  if (m == 0) return q;
  long long s = ((i % m) + m) % m;
  q.pairs.reserve(p.size());
  for (long long k = 0; k < m; ++k) q.pairs.push_back(p.pairs[static_cast<std::size_t>((k + s) % m)]);
  return q;
}

std::size_t first_minimum_index(const std::vector<long long>& increments) {
  long long s = 0, best = 0;
  std::size_t arg = 0;
  for (std::size_t j = 0; j < increments.size(); ++j) {
    s += increments[j];
    if (j == 0 || s < best) {
      best = s;
      arg = j + 1;
    }
  }
  return arg;
}

PathPair vervaat_discrete(const PathPair& p) {
  std::vector<long long> x(p.size());
  long long total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) total += x[i] = p.pairs[i].second - 1;
  if (p.size() == 0 || total != -1)
    throw std::invalid_argument("vervaat_discrete: sum of b minus length must be -1");
  return cyclic_shift(p, static_cast<long long>(first_minimum_index(x)));
}

std::vector<std::size_t> forest_good_shifts(const std::vector<long long>& increments) {
  const std::size_t N = increments.size();
  long long total = 0;
  for (long long v : increments) {
    if (v < -1) throw std::invalid_argument("forest_good_shifts: increment below -1");
    total += v;
  }
  if (N == 0 || total >= 0) throw std::invalid_argument("forest_good_shifts: need a negative total");
  const long long s = -total;
  // first_hit[l] = first k in [0, N) with S_k = -l.
  std::vector<std::size_t> first_hit;
  long long S = 0;
  for (std::size_t k = 0; k < N; ++k) {
    if (-S == static_cast<long long>(first_hit.size())) first_hit.push_back(k);
    S += increments[k];
  }
  const long long M = static_cast<long long>(first_hit.size()) - 1;
  std::vector<std::size_t> out;
  for (long long l = M - s + 1; l <= M; ++l) out.push_back(first_hit[static_cast<std::size_t>(l)]);
  return out;
}

std::vector<std::pair<int, int>> chords_from_discrete_path(const std::vector<long long>& path) {
  const auto m = static_cast<int>(path.size());
  std::vector<int> next(static_cast<std::size_t>(m), 0);
  std::vector<int> stack;  // indices with strictly increasing values, scanned right to left
  for (int i = m - 1; i >= 0; --i) {
    while (!stack.empty() && path[static_cast<std::size_t>(stack.back())] >= path[static_cast<std::size_t>(i)])
      stack.pop_back();
    next[static_cast<std::size_t>(i)] = stack.empty() ? -1 : stack.back();
    stack.push_back(i);
  }
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i)
    if (next[static_cast<std::size_t>(i)] >= 0) out.emplace_back(i + 1, next[static_cast<std::size_t>(i)] + 1);
  return out;
}

}  // namespace minfact
