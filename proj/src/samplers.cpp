#include "minfact/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "minfact/offspring.hpp"

namespace minfact {

namespace {

double log_c(long long x) {
  // log of (x+1)^(x-1) / x!
  const auto d = static_cast<double>(x);
  return (d - 1.0) * std::log(d + 1.0) - std::lgamma(d + 1.0);
}

// Draw an index from unnormalized log-weights.
std::size_t sample_log_weights(const std::vector<double>& lw, RngStream& rng) {
  double mx = -std::numeric_limits<double>::infinity();
  for (double v : lw) mx = std::max(mx, v);
  if (!std::isfinite(mx)) throw std::runtime_error("sampler: empty conditional support");
  double total = 0.0;
  for (double v : lw) total += std::exp(v - mx);
  double u = rng.uniform01() * total;
  std::size_t last = 0;
  for (std::size_t i = 0; i < lw.size(); ++i) {
    if (!std::isfinite(lw[i])) continue;
    last = i;
    u -= std::exp(lw[i] - mx);
    if (u < 0.0) return i;
  }
  return last;
}

struct Task {
  std::vector<int> cycle;      // ground labels c_1 -> c_2 -> ... -> c_m -> c_1
  std::vector<int> positions;  // output slots, increasing
};

}  // namespace

double log_first_gap_prob(int m, int i) {
  if (i < 1 || i > m - 1) return -std::numeric_limits<double>::infinity();
  const double md = m, id = i, jd = m - i;
  return std::log(jd) + std::lgamma(md - 1.0) - (md - 2.0) * std::log(md) + (id - 2.0) * std::log(id) -
         std::lgamma(id) + (jd - 2.0) * std::log(jd) - std::lgamma(jd);
}

int sample_first_gap(int m, RngStream& rng) {
  if (m < 2) throw std::invalid_argument("sample_first_gap: need m >= 2");
  // The normalization is exact, so scan from small gaps and stop early.
  double u = rng.uniform01();
  int last = 1;
  for (int i = 1; i <= m - 1; ++i) {
    double p = std::exp(log_first_gap_prob(m, i));
    if (p > 0.0) last = i;
    u -= p;
    if (u < 0.0) return i;
  }
  return last;
}

Transposition sample_first_transposition(int n, RngStream& rng) {
  int i = sample_first_gap(n, rng);
  int a = static_cast<int>(rng.uniform_int(1, n - i));
  return {a, a + i};
}

Factorization sample_min_factorization(int n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_min_factorization: n must be positive");
  std::vector<Transposition> out(static_cast<std::size_t>(n - 1));
  std::vector<Task> work;
  {
    Task root;
    root.cycle.resize(static_cast<std::size_t>(n));
    std::iota(root.cycle.begin(), root.cycle.end(), 1);
    root.positions.resize(static_cast<std::size_t>(n - 1));
    std::iota(root.positions.begin(), root.positions.end(), 0);
    work.push_back(std::move(root));
  }
  std::vector<int> pick;
  while (!work.empty()) {
    Task t = std::move(work.back());
    work.pop_back();
    const int m = static_cast<int>(t.cycle.size());
    if (m < 2) continue;
    auto lab = [&](int x) { return t.cycle[static_cast<std::size_t>(x - 1)]; };
    if (m == 2) {
      out[static_cast<std::size_t>(t.positions[0])] = Transposition(lab(1), lab(2));
      continue;
    }
    const int i = sample_first_gap(m, rng);
    const int a = static_cast<int>(rng.uniform_int(1, m - i));
    out[static_cast<std::size_t>(t.positions[0])] = Transposition(lab(a), lab(a + i));
    // The remainder after (a, a+i) has cycles a+1 -> ... -> a+i and
    // a+i+1 -> ... -> m -> 1 -> ... -> a.
    Task A, B;
    for (int x = a + 1; x <= a + i; ++x) A.cycle.push_back(lab(x));
    for (int x = a + i + 1; x <= m; ++x) B.cycle.push_back(lab(x));
    for (int x = 1; x <= a; ++x) B.cycle.push_back(lab(x));
    // Uniform subset of size i-1 among the remaining m-2 slots goes to A.
    const int slots = m - 2, p = i - 1;
    const bool choose_a = p <= slots - p;
    const int take = choose_a ? p : slots - p;
    pick.resize(static_cast<std::size_t>(slots));
    std::iota(pick.begin(), pick.end(), 0);
    for (int r = 0; r < take; ++r) {
      auto j = static_cast<std::size_t>(rng.uniform_int(r, slots - 1));
      std::swap(pick[static_cast<std::size_t>(r)], pick[j]);
    }
    std::vector<char> in_first(static_cast<std::size_t>(slots), 0);
    for (int r = 0; r < take; ++r) in_first[static_cast<std::size_t>(pick[static_cast<std::size_t>(r)])] = 1;
    for (int s = 0; s < slots; ++s) {
      const bool to_a = (in_first[static_cast<std::size_t>(s)] != 0) == choose_a;
      (to_a ? A : B).positions.push_back(t.positions[static_cast<std::size_t>(s + 1)]);
    }
    work.push_back(std::move(A));
    work.push_back(std::move(B));
  }
  return Factorization(n, std::move(out));
}

std::vector<int> sample_conditioned_counts(long long N, long long s, RngStream& rng) {
  if (N < 0 || s < 0) throw std::invalid_argument("sample_conditioned_counts: negative argument");
  if (N == 0) {
    if (s != 0) throw std::runtime_error("sample_conditioned_counts: infeasible total");
    return {};
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(N));
  long long rem = s;
  for (long long k = N; k > 1; --k) {
    // P(X = x | S_k = rem) = c_x W(k-1, rem-x) / W(k, rem); parameters cancel.
    const double norm = log_walk_weight(k, rem);
    double u = rng.uniform01();
    long long pick = rem;
    for (long long x = 0; x <= rem; ++x) {
      u -= std::exp(log_c(x) + log_walk_weight(k - 1, rem - x) - norm);
      if (u < 0.0) {
        pick = x;
        break;
      }
    }
    out.push_back(static_cast<int>(pick));
    rem -= pick;
  }
  out.push_back(static_cast<int>(rem));
  return out;
}

namespace {

void check_nk(int n, int K) {
  if (n < 2 || K < 1 || K > n - 1) throw std::invalid_argument("conditioned tree: need 1 <= K <= n-1");
}

PhiCode assemble(std::vector<int> H, const std::vector<int>& W) {
  return PhiCode{std::move(H), W};
}

}  // namespace

PathPair sample_hb_bridge(int n, int K, RngStream& rng) {
  check_nk(n, K);
  const long long nb = n - K, nw = K + 1;
  auto H = sample_conditioned_counts(nb, nw, rng);
  auto W = sample_conditioned_counts(nw, nb - 1, rng);
  PathPair p;
  std::size_t pos = 0;
  for (int h : H) {
    long long b = 0;
    for (int j = 0; j < h; ++j) b += W[pos++];
    p.pairs.emplace_back(h, b);
  }
  return p;
}

PhiCode sample_conditioned_code(int n, int K, bool root_shifted, RngStream& rng) {
  check_nk(n, K);
  const long long nb = n - K, nw = K + 1;
  if (!root_shifted) {
    auto H = sample_conditioned_counts(nb, nw, rng);
    auto W = sample_conditioned_counts(nw, nb - 1, rng);
    std::vector<std::size_t> start(H.size() + 1, 0);
    std::vector<long long> x(H.size());
    for (std::size_t i = 0; i < H.size(); ++i) {
      start[i + 1] = start[i] + static_cast<std::size_t>(H[i]);
      long long b = 0;
      for (std::size_t j = start[i]; j < start[i + 1]; ++j) b += W[j];
      x[i] = b - 1;
    }
    const std::size_t r = first_minimum_index(x) % H.size();
    std::vector<int> H2, W2;
    for (std::size_t k = 0; k < H.size(); ++k) {
      std::size_t i = (k + r) % H.size();
      H2.push_back(H[i]);
      W2.insert(W2.end(), W.begin() + static_cast<long>(start[i]), W.begin() + static_cast<long>(start[i + 1]));
    }
    return assemble(std::move(H2), W2);
  }

  if (nb == 1) return assemble({static_cast<int>(nw)}, std::vector<int>(static_cast<std::size_t>(nw), 0));
  const long long N = nb - 1;
  // Root child count j: weight mu(j-1) j P(S_N = nw - j), parameter-free form.
  std::vector<double> lw(static_cast<std::size_t>(nw));
  for (long long j = 1; j <= nw; ++j)
    lw[static_cast<std::size_t>(j - 1)] = log_c(j - 1) + std::log(static_cast<double>(j)) + log_walk_weight(N, nw - j);
  const long long j = static_cast<long long>(sample_log_weights(lw, rng)) + 1;
  // Black grandchildren s of the root: weight P(S_j = s) s P(S_{nw-j} = N - s).
  std::vector<double> ls(static_cast<std::size_t>(N));
  for (long long s = 1; s <= N; ++s)
    ls[static_cast<std::size_t>(s - 1)] =
        log_walk_weight(j, s) + std::log(static_cast<double>(s)) + log_walk_weight(nw - j, N - s);
  const long long s = static_cast<long long>(sample_log_weights(ls, rng)) + 1;

  auto root_w = sample_conditioned_counts(j, s, rng);
  auto H = sample_conditioned_counts(N, nw - j, rng);
  auto W = sample_conditioned_counts(nw - j, N - s, rng);
  std::vector<std::size_t> start(H.size() + 1, 0);
  std::vector<long long> x(H.size());
  for (std::size_t i = 0; i < H.size(); ++i) {
    start[i + 1] = start[i] + static_cast<std::size_t>(H[i]);
    long long b = 0;
    for (std::size_t q = start[i]; q < start[i + 1]; ++q) b += W[q];
    x[i] = b - 1;
  }
  auto good = forest_good_shifts(x);
  const std::size_t r = good[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long long>(good.size()) - 1))];
  std::vector<int> H2{static_cast<int>(j)};
  std::vector<int> W2(root_w.begin(), root_w.end());
  for (std::size_t k = 0; k < H.size(); ++k) {
    std::size_t i = (k + r) % H.size();
    H2.push_back(H[i]);
    W2.insert(W2.end(), W.begin() + static_cast<long>(start[i]), W.begin() + static_cast<long>(start[i + 1]));
  }
  return assemble(std::move(H2), W2);
}

BiTypeTree sample_conditioned_tree(int n, int K, bool root_shifted, RngStream& rng) {
  return decode_phi(sample_conditioned_code(n, K, root_shifted, rng));
}

NonCrossingPartition partial_product_partition(const Factorization& f, int k) {
  if (k < 1 || k > f.n() - 1) throw std::out_of_range("partial_product_partition: k out of range");
  return NonCrossingPartition(cycle_partition(partial_product(f, k)));
}

std::vector<Transposition> forest_edges(const Factorization& f, int k) {
  if (k < 0 || k > f.n() - 1) throw std::out_of_range("forest_edges: k out of range");
  return {f.factors().begin(), f.factors().begin() + k};
}

}  // namespace minfact
