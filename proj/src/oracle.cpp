#include "minfact/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace minfact::oracle {

namespace {

// Post-compose with (a, b): swap the values a and b.
void apply(std::vector<int>& img, int a, int b) {
  for (int& v : img) {
    if (v == a) v = b;
    else if (v == b) v = a;
  }
}

// DFS over geodesic prefixes towards target; calls leaf at full length.
// (a, b) extends a geodesic iff a and b share a cycle of x -> target(pi^{-1}(x)).
void geodesic_dfs(std::vector<int>& pi, const std::vector<int>& target, int remaining,
                  std::vector<Transposition>& prefix,
                  const std::function<void(const std::vector<Transposition>&)>& leaf) {
  if (remaining == 0) {
    if (pi == target) leaf(prefix);
    return;
  }
  const std::size_t n = pi.size();
  std::vector<int> inv(n), rem(n), label(n, -1);
  for (std::size_t i = 0; i < n; ++i) inv[static_cast<std::size_t>(pi[i] - 1)] = static_cast<int>(i) + 1;
  for (std::size_t x = 0; x < n; ++x) rem[x] = target[static_cast<std::size_t>(inv[x] - 1)];
  int cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] >= 0) continue;
    for (std::size_t j = i; label[j] < 0; j = static_cast<std::size_t>(rem[j] - 1)) label[j] = cycles;
    ++cycles;
  }
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = a + 1; b <= n; ++b) {
      if (label[a - 1] != label[b - 1]) continue;
      apply(pi, static_cast<int>(a), static_cast<int>(b));
      prefix.emplace_back(static_cast<int>(a), static_cast<int>(b));
      geodesic_dfs(pi, target, remaining - 1, prefix, leaf);
      prefix.pop_back();
      apply(pi, static_cast<int>(a), static_cast<int>(b));
    }
  }
}

Integer ipow(long long base, long long e) {
  Integer r = 1;
  for (long long i = 0; i < e; ++i) r *= base;
  return r;
}

Integer factorial(long long n) {
  Integer r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

void for_each_factorization(int n, const std::function<void(const std::vector<Transposition>&)>& visit) {
  if (n < 1) throw std::invalid_argument("enumerate_factorizations: n must be positive");
  if (n > 8) throw std::invalid_argument("enumerate_factorizations: n must be at most 8");
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  const auto target = Permutation::long_cycle(n).image();
  std::vector<Transposition> prefix;
  geodesic_dfs(pi, target, n - 1, prefix, visit);
}

std::vector<Factorization> enumerate_factorizations(int n) {
  std::vector<Factorization> out;
  for_each_factorization(n, [&](const std::vector<Transposition>& f) { out.emplace_back(n, f); });
  return out;
}

bool is_noncrossing_quadruple(const SetPartition& p) {
  check_partition(p);
  std::vector<int> block(static_cast<std::size_t>(p.n) + 1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (int x : p.blocks[b]) block[static_cast<std::size_t>(x)] = static_cast<int>(b);
  auto B = [&](int x) { return block[static_cast<std::size_t>(x)]; };
  for (int a = 1; a <= p.n; ++a)
    for (int b = a + 1; b <= p.n; ++b)
      for (int c = b + 1; c <= p.n; ++c)
        for (int d = c + 1; d <= p.n; ++d)
          if (B(a) == B(c) && B(b) == B(d) && B(a) != B(b)) return false;
  return true;
}

std::vector<NonCrossingPartition> enumerate_noncrossing_partitions(int n) {
  std::vector<NonCrossingPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  // Restricted growth strings enumerate all set partitions.
  std::function<void(int, int)> rec = [&](int i, int maxb) {
    if (i == n) {
      SetPartition p{n, std::vector<std::vector<int>>(static_cast<std::size_t>(maxb + 1))};
      for (int x = 0; x < n; ++x) p.blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x)])].push_back(x + 1);
      if (n == 0) p.blocks.clear();
      if (is_noncrossing(p)) out.emplace_back(std::move(p));
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(maxb, b));
    }
  };
  if (n == 0) {
    out.emplace_back(SetPartition{0, {}});
    return out;
  }
  rgs[0] = 0;
  rec(1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Rational block_weight(int size) {
  if (size < 1) throw std::invalid_argument("block_weight: size must be positive");
  if (size == 1) return Rational(1);
  return Rational(ipow(size, size - 2), factorial(size - 1));
}

Rational formula_partial_product(const NonCrossingPartition& p, int k) {
  const int n = p.n();
  if (k < 1 || k > n - 1) throw std::out_of_range("formula_partial_product: k out of range");
  if (p.block_count() != n - k) return Rational(0);
  Rational r(factorial(k) * factorial(n - k - 1), ipow(n, n - 2));
  for (const auto& b : p.blocks()) r *= block_weight(static_cast<int>(b.size()));
  const auto dual = kreweras(p);
  for (const auto& b : dual.blocks()) r *= block_weight(static_cast<int>(b.size()));
  return r;
}

std::map<NonCrossingPartition, Rational> exact_law_partial_product(int n, int k) {
  if (n > 7) throw std::invalid_argument("exact_law_partial_product: n too large");
  if (k < 1 || k > n - 1) throw std::out_of_range("exact_law_partial_product: k out of range");
  std::map<NonCrossingPartition, Integer> counts;
  Integer total = 0;
  for_each_factorization(n, [&](const std::vector<Transposition>& f) {
    auto pi = product_of(n, std::span(f).first(static_cast<std::size_t>(k)));
    ++counts[NonCrossingPartition(cycle_partition(pi))];
    ++total;
  });
  std::map<NonCrossingPartition, Rational> law;
  for (auto& [p, c] : counts) law.emplace(p, Rational(c, total));
  return law;
}

Integer count_minfacts_of_perm(const Permutation& sigma) {
  const int n = sigma.size();
  if (n > 8) throw std::invalid_argument("count_minfacts_of_perm: n too large");
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  const int cyc = sigma.cycle_count();
  Integer count = 0;
  std::vector<Transposition> prefix;
  geodesic_dfs(pi, sigma.image(), n - cyc, prefix, [&](const std::vector<Transposition>&) { ++count; });
  return count;
}

Integer formula_minfacts_of_perm(const Permutation& sigma) {
  const int n = sigma.size();
  auto part = cycle_partition(sigma);
  Rational r(factorial(n - static_cast<long long>(part.blocks.size())));
  for (const auto& b : part.blocks) r *= block_weight(static_cast<int>(b.size()));
  if (denominator(r) != 1) throw std::logic_error("formula_minfacts_of_perm: non-integral value");
  return numerator(r);
}

Rational formula_first_factor(int n, const Transposition& t) {
  const int i = t.b - t.a;
  return Rational(factorial(n - 2), ipow(n, n - 2)) * block_weight(i) * block_weight(n - i);
}

std::vector<PlaneTree> enumerate_plane_trees(int max_vertices) {
  std::vector<PlaneTree> out;
  std::vector<int> word;
  // Lukasiewicz words: `open` counts attachment slots still to fill.
  std::function<void(int, int)> rec = [&](int remaining, int open) {
    if (open == 0) {
      if (remaining == 0) out.push_back(PlaneTree::from_child_counts(word));
      return;
    }
    if (open > remaining) return;
    for (int c = 0; c <= remaining - open; ++c) {
      word.push_back(c);
      rec(remaining - 1, open - 1 + c);
      word.pop_back();
    }
  };
  for (int v = 1; v <= max_vertices; ++v) {
    for (int c = 0; c <= v - 1; ++c) {
      word.assign(1, c);
      rec(v - 1, c);
    }
  }
  return out;
}

std::vector<BiTypeTree> enumerate_trees(int n_black_max, int n_white_max, bool white_root) {
  if (n_black_max + n_white_max > 14) throw std::invalid_argument("enumerate_trees: bounds too large");
  std::vector<BiTypeTree> out;
  for (auto& t : enumerate_plane_trees(n_black_max + n_white_max)) {
    const int even = t.black_count(), odd = t.white_count();
    const int nb = white_root ? odd : even, nw = white_root ? even : odd;
    if (nb <= n_black_max && nw <= n_white_max) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(img); while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<double> convolution_walk(const OffspringParams& p, int N, int kmax) {
  std::vector<double> mu(static_cast<std::size_t>(kmax) + 1);
  for (int i = 0; i <= kmax; ++i) mu[static_cast<std::size_t>(i)] = pmf_mu(i, p);
  std::vector<double> cur(static_cast<std::size_t>(kmax) + 1, 0.0);
  cur[0] = 1.0;
  for (int step = 0; step < N; ++step) {
    std::vector<double> nxt(cur.size(), 0.0);
    for (int a = 0; a <= kmax; ++a)
      for (int b = 0; a + b <= kmax; ++b)
        nxt[static_cast<std::size_t>(a + b)] += cur[static_cast<std::size_t>(a)] * mu[static_cast<std::size_t>(b)];
    cur.swap(nxt);
  }
  return cur;
}

namespace {

struct Tables {
  int bound = 0;
  int kmax = 0;
  // walk_b[N][k], walk_w[N][k] by convolution.
  std::vector<std::vector<double>> walk_b, walk_w;

  Tables(const OffspringParams& black, const OffspringParams& white, int bnd) : bound(bnd), kmax(3 * bnd + 2) {
    for (int N = 0; N <= kmax; ++N) {
      walk_b.push_back(convolution_walk(black, N, kmax));
      walk_w.push_back(convolution_walk(white, N, kmax));
    }
  }
  double Sb(int N, int k) const { return k < 0 || k > kmax ? 0.0 : walk_b[static_cast<std::size_t>(N)][static_cast<std::size_t>(k)]; }
  double Sw(int N, int k) const { return k < 0 || k > kmax ? 0.0 : walk_w[static_cast<std::size_t>(N)][static_cast<std::size_t>(k)]; }
};

void record(FormulaReport& rep, const std::string& name, std::vector<int> idx, double lhs, double rhs, double tol) {
  ++rep.checked;
  const double err = std::abs(lhs - rhs);
  rep.max_error = std::max(rep.max_error, err);
  if (!(err <= tol)) rep.failures.push_back({name, std::move(idx), lhs, rhs});
}

double tail_mass(const OffspringParams& p, int kmax) {
  double s = 0.0;
  for (int i = 0; i <= kmax; ++i) s += pmf_mu(i, p);
  return std::max(0.0, 1.0 - s);
}

using Table = std::vector<std::vector<double>>;

// table[n_root_color][n_other_color] of single-tree probabilities by enumeration.
void tree_tables(const OffspringParams& black, const OffspringParams& white, int bound, Table& tb, Table& tw) {
  const auto sz = static_cast<std::size_t>(bound) + 1;
  tb.assign(sz, std::vector<double>(sz, 0.0));
  tw.assign(sz, std::vector<double>(sz, 0.0));
  for (const auto& t : enumerate_plane_trees(2 * bound)) {
    double pb = 1.0, pw = 1.0;
    int even = 0, odd = 0;
    for (int v = 0; v < t.size(); ++v) {
      const bool ev = t.depth(v) % 2 == 0;
      (ev ? even : odd)++;
      pb *= ev ? pmf_mu(t.child_count(v), black) : pmf_mu(t.child_count(v), white);
      pw *= ev ? pmf_mu(t.child_count(v), white) : pmf_mu(t.child_count(v), black);
    }
    if (even <= bound && odd <= bound) {
      tb[static_cast<std::size_t>(even)][static_cast<std::size_t>(odd)] += pb;
      tw[static_cast<std::size_t>(odd)][static_cast<std::size_t>(even)] += pw;
    }
  }
}

}  // namespace

FormulaReport check_given_number_formulas(const OffspringParams& black, const OffspringParams& white, int bound,
                                          double tol) {
  FormulaReport rep;
  Tables tab(black, white, bound);
  rep.tail_mass = std::max(tail_mass(black, tab.kmax), tail_mass(white, tab.kmax));
  const auto sz = static_cast<std::size_t>(bound) + 1;
  // tb[n_black][n_white] for black roots, tw[n_black][n_white] for white roots.
  Table tb, tw;
  tree_tables(black, white, bound, tb, tw);
  for (int nb = 1; nb <= bound; ++nb) {
    for (int nw = 0; nw <= bound; ++nw) {
      record(rep, "black-root tree", {nb, nw}, tb[static_cast<std::size_t>(nb)][static_cast<std::size_t>(nw)],
             tab.Sb(nb, nw) * tab.Sw(nw, nb - 1) / nb, tol);
    }
  }
  for (int nw = 1; nw <= bound; ++nw) {
    for (int nb = 0; nb <= bound; ++nb) {
      record(rep, "white-root tree", {nb, nw}, tw[static_cast<std::size_t>(nb)][static_cast<std::size_t>(nw)],
             tab.Sb(nb, nw - 1) * tab.Sw(nw, nb) / nw, tol);
    }
  }
  // Forests of j i.i.d. trees by convolving the single-tree tables.
  for (int root_white = 0; root_white <= 1; ++root_white) {
    const auto& single = root_white ? tw : tb;
    auto forest = single;
    for (int j = 1; j <= bound; ++j) {
      if (j > 1) {
        std::vector<std::vector<double>> nxt(sz, std::vector<double>(sz, 0.0));
        for (std::size_t a = 0; a < sz; ++a)
          for (std::size_t b = 0; b < sz; ++b)
            for (std::size_t c = 0; a + c < sz; ++c)
              for (std::size_t d = 0; b + d < sz; ++d) nxt[a + c][b + d] += forest[a][b] * single[c][d];
        forest.swap(nxt);
      }
      for (int nb = 0; nb <= bound; ++nb) {
        for (int nw = 0; nw <= bound; ++nw) {
          const double lhs = forest[static_cast<std::size_t>(nb)][static_cast<std::size_t>(nw)];
          double rhs = 0.0;
          if (!root_white && nb >= 1) rhs = static_cast<double>(j) / nb * tab.Sb(nb, nw) * tab.Sw(nw, nb - j);
          if (root_white && nw >= 1) rhs = static_cast<double>(j) / nw * tab.Sb(nb, nw - j) * tab.Sw(nw, nb);
          if ((!root_white && nb == 0) || (root_white && nw == 0)) rhs = 0.0;
          record(rep, root_white ? "white-root forest" : "black-root forest", {j, nb, nw}, lhs, rhs, tol);
        }
      }
    }
  }
  return rep;
}

FormulaReport check_walk_identities(const OffspringParams& black, const OffspringParams& white, int bound,
                                    double tol) {
  FormulaReport rep;
  Tables tab(black, white, bound);
  rep.tail_mass = std::max(tail_mass(black, tab.kmax), tail_mass(white, tab.kmax));
  const int hmax = bound, bmax = 3 * bound;
  Table tb, tw;
  tree_tables(black, white, bound, tb, tw);
  // Joint law of one step: P(H = h, B = b) = mu_black(h) P(S_white_h = b).
  auto step = [&](int h, int b) { return pmf_mu(h, black) * tab.Sw(h, b); };
  using Grid = std::vector<std::vector<double>>;
  auto empty = [&] { return Grid(static_cast<std::size_t>(hmax) + 1, std::vector<double>(static_cast<std::size_t>(bmax) + 1, 0.0)); };
  // Unconstrained and excursion-constrained DP over (Hbar, sum of B).
  Grid free = empty(), exc = empty();
  free[0][0] = exc[0][0] = 1.0;
  for (int n1 = 1; n1 <= bound; ++n1) {
    Grid nf = empty(), ne = empty();
    for (int h0 = 0; h0 <= hmax; ++h0)
      for (int b0 = 0; b0 <= bmax; ++b0) {
        const double pf = free[static_cast<std::size_t>(h0)][static_cast<std::size_t>(b0)];
        const double pe = exc[static_cast<std::size_t>(h0)][static_cast<std::size_t>(b0)];
        if (pf == 0.0 && pe == 0.0) continue;
        for (int h = 0; h0 + h <= hmax; ++h)
          for (int b = 0; b0 + b <= bmax; ++b) {
            const double w = step(h, b);
            nf[static_cast<std::size_t>(h0 + h)][static_cast<std::size_t>(b0 + b)] += pf * w;
            ne[static_cast<std::size_t>(h0 + h)][static_cast<std::size_t>(b0 + b)] += pe * w;
          }
      }
    free.swap(nf);
    // Decoupling identity at every index triple.
    for (int n2 = 0; n2 <= hmax; ++n2)
      for (int n3 = -n1; n3 <= bound; ++n3) {
        const int sb = n1 + n3;
        if (sb < 0 || sb > bmax) continue;
        record(rep, "decoupling", {n1, n2, n3}, free[static_cast<std::size_t>(n2)][static_cast<std::size_t>(sb)],
               tab.Sb(n1, n2) * tab.Sw(n2, n1 + n3), tol);
      }
    // Excursion events: Bbar_n1 = -1 (sum b = n1 - 1), Bbar_i >= 0 before.
    for (int n2 = 0; n2 <= hmax; ++n2) {
      const double e = ne[static_cast<std::size_t>(n2)][static_cast<std::size_t>(n1 - 1)];
      const double br = free[static_cast<std::size_t>(n2)][static_cast<std::size_t>(n1 - 1)];
      record(rep, "excursion vs bridge", {n1, n2}, e, br / n1, tol);
      record(rep, "tree enumeration vs excursion", {n1, n2}, tb[static_cast<std::size_t>(n1)][static_cast<std::size_t>(n2)], e, tol);
    }
    // Keep only paths with Bbar_n1 = sum b - n1 >= 0 for the next steps.
    for (int h0 = 0; h0 <= hmax; ++h0)
      for (int b0 = 0; b0 <= bmax; ++b0)
        if (b0 - n1 < 0) ne[static_cast<std::size_t>(h0)][static_cast<std::size_t>(b0)] = 0.0;
    exc.swap(ne);
  }
  return rep;
}

}  // namespace minfact::oracle
