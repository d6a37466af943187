#include "minfact/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "minfact/lamination.hpp"
#include "minfact/levy.hpp"
#include "minfact/ncp.hpp"
#include "minfact/offspring.hpp"
#include "minfact/oracle.hpp"
#include "minfact/path_codec.hpp"
#include "minfact/rng.hpp"
#include "minfact/samplers.hpp"
#include "minfact/stats.hpp"
#include "minfact/tree.hpp"

namespace minfact::verify {

namespace {

using oracle::Integer;
using oracle::Rational;
using T = Thresholds;

std::string str(const Rational& r) { return r.str(); }

std::string fact_str(const std::vector<Transposition>& f) {
  std::string s;
  for (const auto& t : f) s += "(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
  return s;
}

// Runs `tasks` independent chunks with split streams; results indexed by task.
template <class R, class F>
std::vector<R> chunked(std::uint64_t seed, std::size_t tasks, F&& body) {
  std::vector<R> out(tasks);
  RngStream base(seed);
  parallel_for(tasks, [&](std::size_t i) {
    RngStream rng = base.split(i);
    out[i] = body(i, rng);
  });
  return out;
}

double tv_distance(const std::map<std::vector<int>, double>& p, const std::map<std::vector<int>, double>& q) {
  double tv = 0.0;
  for (const auto& [k, v] : p) {
    auto it = q.find(k);
    tv += std::abs(v - (it == q.end() ? 0.0 : it->second));
  }
  for (const auto& [k, v] : q)
    if (!p.count(k)) tv += std::abs(v);
  return 0.5 * tv;
}

// --- criterion 1
SuiteResult suite_counts(const Options& o) {
  SuiteResult r;
  r.pass = true;
  const auto start = std::chrono::steady_clock::now();
  json rows = json::array();
  const int top = o.include_n8 ? 8 : 7;
  for (int n = 1; n <= top; ++n) {
    long long count = 0;
    oracle::for_each_factorization(n, [&](const std::vector<Transposition>&) { ++count; });
    long long expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= n;
    const bool ok = count == expected;
    r.pass = r.pass && ok;
    rows.push_back({{"n", n}, {"count", count}, {"expected", expected}, {"pass", ok}});
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool fast = secs < T::count_runtime_seconds;
  r.pass = r.pass && fast;
  r.details = {{"rows", rows}, {"enumeration_seconds", secs}, {"runtime_limit_seconds", T::count_runtime_seconds}};
  return r;
}

// --- criterion 2
SuiteResult suite_lawproduct(const Options& o) {
  SuiteResult r;
  r.pass = true;
  std::vector<int> ns = o.n > 0 ? std::vector<int>{o.n} : std::vector<int>{4, 5, 6};
  json rows = json::array(), bad = json::array();
  for (int n : ns) {
    if (n < 2 || n > 7) throw std::invalid_argument("lawproduct: n must lie in [2, 7]");
    auto ncps = oracle::enumerate_noncrossing_partitions(n);
    for (int k = 1; k <= n - 1; ++k) {
      auto law = oracle::exact_law_partial_product(n, k);
      Rational total = 0;
      int checked = 0;
      for (const auto& p : ncps) {
        if (p.block_count() != n - k) continue;
        ++checked;
        auto it = law.find(p);
        Rational emp = it == law.end() ? Rational(0) : it->second;
        Rational formula = oracle::formula_partial_product(p, k);
        total += emp;
        if (emp != formula) {
          r.pass = false;
          bad.push_back({{"n", n}, {"k", k}, {"partition", p.partition().to_string()}, {"enumerated", str(emp)},
                         {"formula", str(formula)}});
        }
      }
      const bool sums = total == 1 && static_cast<int>(law.size()) == checked;
      r.pass = r.pass && sums;
      rows.push_back({{"n", n}, {"k", k}, {"partitions", checked}, {"total_is_one", sums}});
    }
  }
  r.details = {{"rows", rows}, {"counterexamples", bad}};
  return r;
}

// --- criterion 3
SuiteResult suite_marginals(const Options& o) {
  SuiteResult r;
  r.pass = true;
  json stat = json::array(), marg = json::array(), bad = json::array();
  for (int n = 2; n <= 6; ++n) {
    std::map<std::vector<Transposition>, long long> pre, suf;
    oracle::for_each_factorization(n, [&](const std::vector<Transposition>& f) {
      ++pre[std::vector<Transposition>(f.begin(), f.end() - 1)];
      ++suf[std::vector<Transposition>(f.begin() + 1, f.end())];
    });
    const bool ok = pre == suf;
    if (!ok) {
      for (const auto& [k, v] : pre) {
        auto it = suf.find(k);
        const long long w = it == suf.end() ? 0 : it->second;
        if (v != w) {
          bad.push_back({{"n", n}, {"pattern", fact_str(k)}, {"prefix_count", v}, {"suffix_count", w}});
          break;
        }
      }
    }
    r.pass = r.pass && ok;
    stat.push_back({{"n", n}, {"patterns", pre.size()}, {"pass", ok}});
  }
  for (int n = 2; n <= 7; ++n) {
    std::map<Transposition, long long> first;
    long long total = 0;
    oracle::for_each_factorization(n, [&](const std::vector<Transposition>& f) {
      ++first[f[0]];
      ++total;
    });
    bool ok = true;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        const Transposition t(a, b);
        const Rational emp(first.count(t) ? first[t] : 0, total);
        const Rational formula = oracle::formula_first_factor(n, t);
        if (emp != formula) {
          ok = false;
          bad.push_back({{"n", n}, {"first", fact_str({t})}, {"enumerated", str(emp)}, {"formula", str(formula)}});
        }
      }
    r.pass = r.pass && ok;
    marg.push_back({{"n", n}, {"pass", ok}});
  }
  const int n = o.n > 0 ? o.n : T::borel_n;
  const std::size_t tasks = 100;
  const int per = T::borel_samples / static_cast<int>(tasks);
  auto hists = chunked<std::vector<long long>>(o.seed, tasks, [&](std::size_t, RngStream& rng) {
    std::vector<long long> h(7, 0);
    for (int s = 0; s < per; ++s) {
      auto t = sample_first_transposition(n, rng);
      ++h[static_cast<std::size_t>(std::min(t.b - t.a, 6))];
    }
    return h;
  });
  json borel = json::array();
  for (int i = 1; i <= 5; ++i) {
    long long c = 0;
    for (const auto& h : hists) c += h[static_cast<std::size_t>(i)];
    const double emp = static_cast<double>(c) / (per * static_cast<double>(tasks));
    const double ref = borel_pmf(i);
    const bool ok = std::abs(emp - ref) <= T::borel_tol;
    r.pass = r.pass && ok;
    borel.push_back({{"gap", i}, {"empirical", emp}, {"borel", ref}, {"pass", ok}});
  }
  r.details = {{"stationarity", stat}, {"first_factor_marginal", marg}, {"borel", borel},
               {"borel_n", n}, {"borel_samples", per * static_cast<int>(tasks)}, {"tolerance", T::borel_tol},
               {"counterexamples", bad}};
  return r;
}

// --- criterion 4
SuiteResult suite_minfact_count(const Options& o) {
  SuiteResult r;
  r.pass = true;
  const int top = o.n > 0 ? o.n : 6;
  json rows = json::array(), bad = json::array();
  for (int n = 1; n <= top; ++n) {
    int checked = 0;
    for (const auto& sigma : oracle::all_permutations(n)) {
      ++checked;
      const Integer brute = oracle::count_minfacts_of_perm(sigma);
      const Integer formula = oracle::formula_minfacts_of_perm(sigma);
      if (brute != formula) {
        r.pass = false;
        bad.push_back({{"sigma", sigma.to_string()}, {"brute_force", brute.str()}, {"formula", formula.str()}});
      }
    }
    rows.push_back({{"n", n}, {"permutations", checked}});
  }
  r.details = {{"rows", rows}, {"counterexamples", bad}};
  return r;
}

// --- criterion 5
SuiteResult suite_bijections(const Options& o) {
  SuiteResult r;
  r.pass = true;
  const int top = o.n > 0 ? o.n : 8;
  json rows = json::array(), bad = json::array();
  for (int n = 1; n <= top; ++n) {
    auto ncps = oracle::enumerate_noncrossing_partitions(n);
    int ok_tree = 0, ok_krew = 0;
    for (const auto& p : ncps) {
      auto t = dual_tree(p);
      auto kp = kreweras(p);
      if (partition_of_tree(t) == p && t.black_count() == p.block_count() && t.white_count() == kp.block_count())
        ++ok_tree;
      else if (bad.size() < 20)
        bad.push_back({{"check", "dual tree round trip"}, {"partition", p.partition().to_string()}});
      if (kreweras(kp) == rotate(p, -1))
        ++ok_krew;
      else if (bad.size() < 20)
        bad.push_back({{"check", "double complement"}, {"partition", p.partition().to_string()}});
    }
    const bool ok = ok_tree == static_cast<int>(ncps.size()) && ok_krew == static_cast<int>(ncps.size());
    r.pass = r.pass && ok;
    rows.push_back({{"n", n}, {"partitions", ncps.size()}, {"tree_round_trips", ok_tree}, {"kreweras_rotations", ok_krew}});
  }
  const int max_vertices = 9;
  auto trees = oracle::enumerate_plane_trees(max_vertices);
  int ok_phi = 0;
  for (const auto& t : trees) {
    auto code = encode_phi(t);
    if (phi_violation(code).empty() && decode_phi(code) == t)
      ++ok_phi;
    else if (bad.size() < 20)
      bad.push_back({{"check", "phi round trip"}, {"parents", t.parents()}});
  }
  r.pass = r.pass && ok_phi == static_cast<int>(trees.size());
  r.details = {{"rows", rows}, {"trees", trees.size()}, {"phi_round_trips", ok_phi}, {"counterexamples", bad}};
  return r;
}

json report_json(const oracle::FormulaReport& rep) {
  json fails = json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(rep.failures.size(), 20); ++i) {
    const auto& f = rep.failures[i];
    fails.push_back({{"identity", f.name}, {"index", f.index}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  return {{"checked", rep.checked}, {"max_abs_error", rep.max_error}, {"truncated_tail_mass", rep.tail_mass},
          {"failures", fails}};
}

// --- criterion 6
SuiteResult suite_bgw(const Options&) {
  SuiteResult r;
  r.pass = true;
  json sets = json::array();
  // Parameter pairs from (n, K) = (10, 3), (7, 3) and a balanced pair.
  const std::vector<std::pair<double, double>> means{{4.0 / 7.0, 7.0 / 4.0}, {1.0, 1.0}, {4.0 / 4.0 + 0.25, 0.8}};
  for (auto [mb, mw] : means) {
    auto black = solve_params(mb), white = solve_params(mw);
    auto trees = oracle::check_given_number_formulas(black, white, 6, T::formula_tol);
    auto walks = oracle::check_walk_identities(black, white, 6, T::formula_tol);
    r.pass = r.pass && trees.pass() && walks.pass();
    sets.push_back({{"black_mean", mb}, {"white_mean", mw}, {"tree_formulas", report_json(trees)},
                    {"walk_identities", report_json(walks)}});
  }
  r.details = {{"parameter_sets", sets}, {"tolerance", T::formula_tol}};
  return r;
}

std::vector<int> key_of(const BiTypeTree& t) { return t.parents(); }

std::vector<int> key_of(const NonCrossingPartition& p) {
  std::vector<int> k;
  for (const auto& b : p.blocks()) {
    k.insert(k.end(), b.begin(), b.end());
    k.push_back(0);
  }
  return k;
}

// Exact conditional law over black-rooted trees with the given color counts.
std::map<std::vector<int>, double> exact_tree_law(int n, int K, bool root_shifted) {
  const int nb = n - K, nw = K + 1;
  auto black = solve_params(static_cast<double>(K + 1) / (n - K));
  auto white = solve_params(static_cast<double>(n - K) / (K + 1));
  std::map<std::vector<int>, double> law;
  double total = 0.0;
  for (const auto& t : oracle::enumerate_trees(nb, nw)) {
    if (t.black_count() != nb || t.white_count() != nw) continue;
    double w = 1.0;
    for (int v = 0; v < t.size(); ++v) {
      const int k = t.child_count(v);
      if (!t.is_black(v)) w *= pmf_mu(k, white);
      else if (v == 0 && root_shifted) w *= pmf_mu_tilde(k, black);
      else w *= pmf_mu(k, black);
    }
    law[key_of(t)] = w;
    total += w;
  }
  for (auto& [k, v] : law) v /= total;
  return law;
}

// --- criterion 7
SuiteResult suite_samplers(const Options& o) {
  SuiteResult r;
  r.pass = true;
  // Uniformity over the 125 factorizations of the 5-cycle.
  auto all5 = oracle::enumerate_factorizations(5);
  std::map<std::vector<Transposition>, std::size_t> index;
  for (std::size_t i = 0; i < all5.size(); ++i) index[all5[i].factors()] = i;
  const std::size_t tasks = 100;
  const int per = T::uniform_draws / static_cast<int>(tasks);
  auto counts = chunked<std::vector<long long>>(o.seed, tasks, [&](std::size_t, RngStream& rng) {
    std::vector<long long> c(all5.size(), 0);
    for (int s = 0; s < per; ++s) ++c[index.at(sample_min_factorization(5, rng).factors())];
    return c;
  });
  std::vector<long long> total(all5.size(), 0);
  for (const auto& c : counts)
    for (std::size_t i = 0; i < c.size(); ++i) total[i] += c[i];
  const double draws = per * static_cast<double>(tasks);
  const double expected = draws / static_cast<double>(all5.size());
  double chi2 = 0.0;
  for (long long c : total) chi2 += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
  const double pval = chi_square_pvalue(chi2, static_cast<double>(all5.size() - 1));
  const bool uniform_ok = pval >= T::uniform_min_pvalue;

  auto tree_tv = [&](int n, int K, bool shifted, std::uint64_t salt) {
    auto exact = exact_tree_law(n, K, shifted);
    auto hits = chunked<std::map<std::vector<int>, long long>>(o.seed ^ salt, tasks, [&](std::size_t, RngStream& rng) {
      std::map<std::vector<int>, long long> h;
      for (int s = 0; s < T::tree_draws / static_cast<int>(tasks); ++s)
        ++h[key_of(sample_conditioned_tree(n, K, shifted, rng))];
      return h;
    });
    std::map<std::vector<int>, double> emp;
    for (const auto& h : hits)
      for (const auto& [k, v] : h) emp[k] += static_cast<double>(v) / T::tree_draws;
    return std::make_pair(tv_distance(emp, exact), exact.size());
  };
  auto [tv_plain, support_plain] = tree_tv(4, 2, false, 0x11);
  auto [tv_shift, support_shift] = tree_tv(4, 2, true, 0x22);
  const bool tree_ok = tv_plain < T::tree_tv && tv_shift < T::tree_tv;

  // Partition of the root-shifted tree versus the exact partial-product law.
  const int n = 5, K = 2;
  auto hits = chunked<std::map<std::vector<int>, long long>>(o.seed ^ 0x33, tasks, [&](std::size_t, RngStream& rng) {
    std::map<std::vector<int>, long long> h;
    for (int s = 0; s < T::tree_draws / static_cast<int>(tasks); ++s)
      ++h[key_of(partition_of_tree(sample_conditioned_tree(n, K, true, rng)))];
    return h;
  });
  std::map<std::vector<int>, double> emp, exact;
  for (const auto& h : hits)
    for (const auto& [k, v] : h) emp[k] += static_cast<double>(v) / T::tree_draws;
  for (const auto& p : oracle::enumerate_noncrossing_partitions(n))
    if (p.block_count() == n - K) exact[key_of(p)] = static_cast<double>(oracle::formula_partial_product(p, K));
  const double tv_part = tv_distance(emp, exact);
  const bool part_ok = tv_part < T::tree_tv;

  r.pass = uniform_ok && tree_ok && part_ok;
  r.details = {{"uniform_M5", {{"draws", draws}, {"chi_square", chi2}, {"dof", all5.size() - 1}, {"p_value", pval},
                               {"min_p_value", T::uniform_min_pvalue}, {"pass", uniform_ok}}},
               {"conditioned_tree_n4_K2", {{"tv", tv_plain}, {"support", support_plain},
                                           {"tv_root_shifted", tv_shift}, {"support_root_shifted", support_shift},
                                           {"limit", T::tree_tv}, {"pass", tree_ok}}},
               {"tree_route_partition_n5_K2", {{"tv", tv_part}, {"limit", T::tree_tv}, {"pass", part_ok}}}};
  return r;
}

// --- criterion 8
SuiteResult suite_walk_pmf(const Options&) {
  SuiteResult r;
  r.pass = true;
  double worst = 0.0;
  json bad = json::array();
  for (double m : {0.05, 0.3, 1.0, 2.5, 20.0}) {
    auto p = solve_params(m);
    for (int N = 1; N <= 6; ++N) {
      auto conv = oracle::convolution_walk(p, N, 10);
      for (int k = 0; k <= 10; ++k) {
        const double closed = walk_pmf(N, k, p);
        const double ref = conv[static_cast<std::size_t>(k)];
        const double rel = std::abs(closed - ref) / ref;
        worst = std::max(worst, rel);
        if (!(rel <= T::walk_rel_tol)) {
          r.pass = false;
          bad.push_back({{"m", m}, {"N", N}, {"k", k}, {"closed_form", closed}, {"convolution", ref}});
        }
      }
    }
  }
  r.details = {{"max_relative_error", worst}, {"tolerance", T::walk_rel_tol}, {"counterexamples", bad}};
  return r;
}

double integrate_half_line(const std::function<double(double)>& f, double a) {
  // Split at a + 1 so the finite part absorbs the boundary layer.
  using boost::math::quadrature::gauss_kronrod;
  double err = 0.0;
  double finite = 0.0;
  const int pieces = 64;
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + static_cast<double>(i) / pieces, hi = a + static_cast<double>(i + 1) / pieces;
    finite += gauss_kronrod<double, 61>::integrate(f, lo, hi, 6, 1e-12, &err);
  }
  boost::math::quadrature::exp_sinh<double> tail;
  return finite + tail.integrate(f, a + 1.0, std::numeric_limits<double>::infinity(), 1e-13);
}

// --- criterion 9
SuiteResult suite_levy(const Options& o) {
  SuiteResult r;
  r.pass = true;
  json ints = json::array();
  for (double c : {0.5, 1.0, 5.0})
    for (double t : {0.5, 1.0}) {
      const double I = integrate_half_line([&](double x) { return density_d(t, x, c); }, -c * t);
      const bool ok = std::abs(I - 1.0) <= T::density_integral_tol;
      r.pass = r.pass && ok;
      ints.push_back({{"density", "d"}, {"c", c}, {"t", t}, {"integral", I}, {"pass", ok}});
    }
  for (double c : {0.5, 1.0, 5.0})
    for (double u : {0.5, 1.0}) {
      const double I = integrate_half_line([&](double x) { return density_q(u, x, c); }, 0.0);
      const bool ok = std::abs(I - 1.0) <= T::density_integral_tol;
      r.pass = r.pass && ok;
      ints.push_back({{"density", "q"}, {"c", c}, {"u", u}, {"integral", I}, {"pass", ok}});
    }
  double worst = 0.0;
  for (double c : {0.5, 1.0, 5.0})
    for (double u : {0.1, 0.5, 0.9})
      for (int i = 0; i <= 400; ++i) {
        const double x = -c * (1.0 - u) + 1e-3 + 0.025 * i;
        worst = std::max(worst, std::abs(density_q(1.0 - u, x + c * (1.0 - u), c) - density_d(1.0 - u, x, c)));
      }
  const bool identity_ok = worst <= T::density_identity_tol;
  const double dt = 0.01, c = 5.0;
  const std::size_t tasks = 100;
  const int per = T::ig_draws / static_cast<int>(tasks);
  auto sums = chunked<double>(o.seed, tasks, [&](std::size_t, RngStream& rng) {
    double s = 0.0;
    for (int i = 0; i < per; ++i) s += ig_increment(dt, c, rng);
    return s;
  });
  double total = 0.0;
  for (double s : sums) total += s;
  const double mean = total / (per * static_cast<double>(tasks));
  const double rel = std::abs(mean - c * dt) / (c * dt);
  const bool mean_ok = rel <= T::ig_mean_rel_tol;
  r.pass = r.pass && identity_ok && mean_ok;
  r.details = {{"integrals", ints},
               {"integral_tolerance", T::density_integral_tol},
               {"identity_max_abs_diff", worst},
               {"identity_tolerance", T::density_identity_tol},
               {"identity_pass", identity_ok},
               {"ig_mean", {{"draws", per * static_cast<int>(tasks)}, {"mean", mean}, {"target", c * dt},
                            {"relative_error", rel}, {"pass", mean_ok}}}};
  return r;
}

struct EndpointLaw {
  std::vector<double> cdf;  // P(S_white_Hbar <= k), k = 0..kmax
  long long offset = 0;      // n - K
};

EndpointLaw endpoint_law(int n, int K) {
  const long long nb = n - K;
  auto black = solve_params(static_cast<double>(K + 1) / nb);
  auto white = solve_params(static_cast<double>(nb) / (K + 1));
  const long long kmax = 20LL * n;
  std::vector<double> pmf(static_cast<std::size_t>(kmax) + 1, 0.0);
  // Mixture over Hbar ~ S_black_{n-K}.
  const double hmean = black.m * static_cast<double>(nb);
  const long long hmax = static_cast<long long>(hmean + 20.0 * std::sqrt(black.variance * nb) + 50.0);
  for (long long h = 0; h <= hmax; ++h) {
    const double ph = walk_pmf(nb, h, black);
    if (ph < 1e-18) continue;
    for (long long k = 0; k <= kmax; ++k) pmf[static_cast<std::size_t>(k)] += ph * walk_pmf(h, k, white);
  }
  EndpointLaw law;
  law.offset = nb;
  law.cdf.resize(pmf.size());
  double s = 0.0;
  for (std::size_t k = 0; k < pmf.size(); ++k) law.cdf[k] = s += pmf[k];
  return law;
}

struct ChordStats {
  double longest_small = 0.0, longest_large = 0.0, hausdorff_large = 0.0;
};

std::vector<ChordStats> chord_runs(int n, int seeds, std::uint64_t seed, bool with_small) {
  const int k_small = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n)) / std::log(static_cast<double>(n))));
  const int k_large = static_cast<int>(std::floor(5.0 * std::sqrt(static_cast<double>(n))));
  return chunked<ChordStats>(seed, static_cast<std::size_t>(seeds), [&](std::size_t, RngStream& rng) {
    ChordStats s;
    auto f = sample_min_factorization(n, rng);
    if (with_small) s.longest_small = longest_chord(lam_of_partition(partial_product_partition(f, k_small)));
    auto P = lam_of_partition(partial_product_partition(f, k_large));
    auto F = lam_of_forest(n, forest_edges(f, k_large));
    s.longest_large = longest_chord(P);
    s.hausdorff_large = hausdorff(F, P, HausdorffMode::chords_only);
    return s;
  });
}

// --- criterion 10
SuiteResult suite_scaling(const Options& o) {
  SuiteResult r;
  const int n = o.n > 0 ? o.n : T::scaling_n;
  const double c = 1.0;
  const int K = static_cast<int>(std::floor(c * std::sqrt(static_cast<double>(n))));
  auto law = endpoint_law(n, K);
  auto value_of = [&](std::size_t k) { return c * (static_cast<double>(k) - static_cast<double>(law.offset)) / n; };
  double exact_ks = 0.0;
  for (std::size_t k = 0; k < law.cdf.size(); ++k) {
    const double F = cdf_d(1.0, value_of(k), c);
    exact_ks = std::max({exact_ks, std::abs(law.cdf[k] - F), std::abs((k ? law.cdf[k - 1] : 0.0) - F)});
  }
  RngStream rng(o.seed);
  std::vector<double> xs;
  for (int i = 0; i < T::endpoint_samples; ++i) {
    const double u = rng.uniform01() * law.cdf.back();
    auto it = std::upper_bound(law.cdf.begin(), law.cdf.end(), u);
    xs.push_back(value_of(static_cast<std::size_t>(it - law.cdf.begin())));
  }
  std::sort(xs.begin(), xs.end());
  const double ks = ks_distance(xs, [&](double x) { return cdf_d(1.0, x, c); });
  const bool endpoint_ok = ks <= T::endpoint_ks;

  auto runs = chord_runs(n, T::chord_seeds, o.seed ^ 0x5eed, true);
  std::vector<double> small, large, dh;
  for (const auto& s : runs) {
    small.push_back(s.longest_small);
    large.push_back(s.longest_large);
    dh.push_back(s.hausdorff_large);
  }
  const double med_small = median(small), med_large = median(large), med_dh = median(dh);
  const bool chord_ok = med_small < med_large;
  const bool dh_ok = med_dh < T::hausdorff_median;
  r.pass = endpoint_ok && chord_ok && dh_ok;
  r.details = {
      {"n", n},
      {"endpoint_marginal", {{"K", K}, {"samples", T::endpoint_samples}, {"ks", ks}, {"exact_law_ks", exact_ks},
                             {"limit", T::endpoint_ks}, {"tail_mass_beyond_table", 1.0 - law.cdf.back()},
                             {"pass", endpoint_ok}}},
      {"longest_chord", {{"seeds", T::chord_seeds},
                         {"K_small", static_cast<int>(std::floor(std::sqrt(static_cast<double>(n)) / std::log(static_cast<double>(n))))},
                         {"K_large", static_cast<int>(std::floor(5.0 * std::sqrt(static_cast<double>(n))))},
                         {"median_small", med_small}, {"median_large", med_large}, {"pass", chord_ok}}},
      {"hausdorff_F_P", {{"median", med_dh}, {"limit", T::hausdorff_median}, {"pass", dh_ok}}}};
  return r;
}

// --- criterion 11
SuiteResult suite_laminations(const Options& o) {
  SuiteResult r;
  const int trials = T::lamination_trials;
  struct Out {
    bool forest_ok = true, partition_ok = true, circle_ok = true, tree_ok = true;
    int n = 0;
  };
  auto outs = chunked<Out>(o.seed, static_cast<std::size_t>(trials), [&](std::size_t, RngStream& rng) {
    Out out;
    const int n = static_cast<int>(rng.uniform_int(2, T::lamination_max_n));
    out.n = n;
    auto f = sample_min_factorization(n, rng);
    const int k = static_cast<int>(rng.uniform_int(1, n - 1));
    auto P = lam_of_partition(partial_product_partition(f, k));
    out.partition_ok = is_noncrossing(P);
    try {
      auto F = lam_of_forest(n, forest_edges(f, k));
      out.circle_ok = circle_points(F) == circle_points(P);
    } catch (const std::invalid_argument&) {
      out.forest_ok = false;
    }
    const int K = static_cast<int>(rng.uniform_int(1, n - 1));
    auto t = sample_conditioned_tree(n, K, rng.uniform01() < 0.5, rng);
    auto L = lam_of_discrete_path(hb_paths(t).b_bar(), t);
    out.tree_ok = is_noncrossing(L);
    return out;
  });
  int forest = 0, part = 0, circle = 0, tree = 0;
  for (const auto& x : outs) {
    forest += x.forest_ok;
    part += x.partition_ok;
    circle += x.circle_ok;
    tree += x.tree_ok;
  }
  r.pass = forest == trials && part == trials && circle == trials && tree == trials;
  r.details = {{"trials", trials}, {"max_n", T::lamination_max_n}, {"forest_noncrossing", forest},
               {"partition_noncrossing", part}, {"circle_identity", circle}, {"tree_lamination_noncrossing", tree}};
  return r;
}

// --- supplementary
SuiteResult suite_symmetry(const Options&) {
  SuiteResult r;
  r.pass = true;
  json rows = json::array();
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      auto a = oracle::exact_law_partial_product(n, n - k - 1);
      auto b = oracle::exact_law_partial_product(n, k);
      std::map<NonCrossingPartition, Rational> kb;
      for (const auto& [p, q] : b) kb[kreweras(p)] += q;
      bool ok = a == kb;
      // Block-size multisets of (P, K(P)) and (K(P), K(K(P))).
      for (const auto& [p, q] : b) {
        auto sizes = [](const NonCrossingPartition& x) {
          std::vector<std::size_t> s;
          for (const auto& blk : x.blocks()) s.push_back(blk.size());
          std::sort(s.begin(), s.end());
          return s;
        };
        auto kp = kreweras(p);
        auto lhs = sizes(p), rhs = sizes(kreweras(kp));
        if (lhs != rhs) ok = false;
        if (kp.block_count() + p.block_count() != n + 1) ok = false;
      }
      r.pass = r.pass && ok;
      rows.push_back({{"n", n}, {"k", k}, {"pass", ok}});
    }
  }
  r.details = {{"rows", rows}};
  return r;
}

SuiteResult suite_llt(const Options& o) {
  SuiteResult r;
  const int n = o.n > 0 ? o.n : T::scaling_n;
  const int K = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
  const long long nb = n - K;
  auto black = solve_params(static_cast<double>(K + 1) / nb);
  auto white = solve_params(static_cast<double>(nb) / (K + 1));
  const double D = std::sqrt(black.variance * static_cast<double>(nb));
  double sup_b = 0.0;
  for (long long k = 0; k <= static_cast<long long>(nb * black.m + 20 * D + 20); ++k) {
    const double x = (static_cast<double>(k) - static_cast<double>(nb) * black.m) / D;
    const double gauss = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
    sup_b = std::max(sup_b, std::abs(D * walk_pmf(nb, k, black) - gauss));
  }
  // D_white P(S_white_K = k) against q_1(k / D_white) with c = K / sqrt(n).
  const double c = K / std::sqrt(static_cast<double>(n));
  const double Dw = std::sqrt(white.variance * K);
  double sup_w = 0.0;
  for (long long k = 1; k <= 20LL * n; ++k)
    sup_w = std::max(sup_w, std::abs(Dw * walk_pmf(K, k, white) - density_q(1.0, static_cast<double>(k) / Dw, c)));
  const bool ok_b = sup_b <= T::llt_sup, ok_w = sup_w <= T::llt_sup;
  r.pass = ok_b && ok_w;
  r.details = {{"n", n}, {"K", K}, {"black_scale", D}, {"white_scale", Dw}, {"black_sup", sup_b}, {"white_sup", sup_w},
               {"limit", T::llt_sup}, {"black_pass", ok_b}, {"white_pass", ok_w}};
  return r;
}

SuiteResult suite_hausdorff(const Options& o) {
  SuiteResult r;
  const std::vector<Transposition> fig{{1, 3}, {6, 12}, {1, 5}, {7, 12}, {9, 10}, {11, 12}};
  auto F = lam_of_forest(12, fig);
  auto P = lam_of_partition(NonCrossingPartition(cycle_partition(product_of(12, fig))));
  const double d = hausdorff(F, P, HausdorffMode::chords_only);
  const double bound = 0.5 * std::max(longest_chord(F), longest_chord(P));
  const bool example_ok = d <= bound + 1e-3 && hausdorff(P, P) == 0.0;
  // Parallel chords 0.1 <-> 0.4 and 0.6 <-> 0.9 are horizontal at distance 2 sin(0.2 pi) apart.
  Lamination a{0, {{0.1, 0.4}}}, b{0, {{0.6, 0.9}}};
  const double dab = hausdorff(a, b, HausdorffMode::chords_only);
  const double exact = 2.0 * std::sin(0.2 * std::numbers::pi);
  const bool par_ok = std::abs(dab - exact) <= 1e-3;
  const int n = o.n > 0 ? o.n : T::scaling_n;
  auto runs = chord_runs(n, 50, o.seed, false);
  std::vector<double> dh;
  for (const auto& s : runs) dh.push_back(s.hausdorff_large);
  const double med = median(dh);
  const bool med_ok = med < T::hausdorff_median;
  r.pass = example_ok && par_ok && med_ok;
  r.details = {{"worked_example", {{"distance", d}, {"bound", bound}, {"pass", example_ok}}},
               {"parallel_chords", {{"distance", dab}, {"exact", exact}, {"pass", par_ok}}},
               {"median_at_K_5sqrt_n", {{"n", n}, {"seeds", 50}, {"median", med}, {"pass", med_ok}}}};
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> list{
      {"counts", 1, "number of minimal factorizations for n <= 8"},
      {"lawproduct", 2, "exact law of the partial-product partition"},
      {"marginals", 3, "stationarity, first-factor marginal, Borel limit of the first gap"},
      {"minfact-count", 4, "minimal factorizations of every permutation, n <= 6"},
      {"bijections", 5, "dual tree, Phi code and double Kreweras complement"},
      {"bgw-formulas", 6, "given-number formulas for alternating trees and walks"},
      {"samplers", 7, "exactness of the factorization and conditioned-tree samplers"},
      {"walk-pmf", 8, "closed form of the walk pmf against convolution"},
      {"levy", 9, "densities, identity and inverse Gaussian increments"},
      {"scaling", 10, "endpoint marginal, longest chords and Hausdorff diagnostics"},
      {"laminations", 11, "non-crossing and circle-intersection checks"},
      {"symmetry", 0, "exact Kreweras symmetry of partial-product laws"},
      {"llt-diagnostic", 0, "local limit diagnostics for the walk pmfs"},
      {"hausdorff", 0, "Hausdorff distance checks on hand cases and random samples"},
  };
  return list;
}

std::string suite_for_criterion(int criterion) {
  for (const auto& s : suites())
    if (s.criterion == criterion) return s.name;
  throw std::invalid_argument("no suite for criterion " + std::to_string(criterion));
}

SuiteResult run_suite(const std::string& name, const Options& opts) {
  using Fn = SuiteResult (*)(const Options&);
  static const std::map<std::string, Fn> table{
      {"counts", suite_counts},         {"lawproduct", suite_lawproduct}, {"marginals", suite_marginals},
      {"minfact-count", suite_minfact_count}, {"bijections", suite_bijections}, {"bgw-formulas", suite_bgw},
      {"samplers", suite_samplers},     {"walk-pmf", suite_walk_pmf},     {"levy", suite_levy},
      {"scaling", suite_scaling},       {"laminations", suite_laminations}, {"symmetry", suite_symmetry},
      {"llt-diagnostic", suite_llt},    {"hausdorff", suite_hausdorff},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r = it->second(opts);
  r.suite = name;
  for (const auto& s : suites())
    if (s.name == name) r.criterion = s.criterion;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace minfact::verify
