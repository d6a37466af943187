#include "minfact/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "minfact/io.hpp"
#include "minfact/lamination.hpp"
#include "minfact/offspring.hpp"
#include "minfact/samplers.hpp"

namespace minfact {

unsigned thread_count() {
  if (const char* env = std::getenv("MINFACT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

double ks_distance(const std::vector<double>& sorted, const std::function<double(double)>& cdf) {
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, std::abs(static_cast<double>(i + 1) / n - f), std::abs(f - static_cast<double>(i) / n)});
  }
  return d;
}

double chi_square_pvalue(double statistic, double dof) {
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median of empty sample");
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::string run_stats(const StatsConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("stats: n must be at least 2");
  if (cfg.samples < 1) throw std::invalid_argument("stats: samples must be positive");
  int K = cfg.K > 0 ? cfg.K : static_cast<int>(std::floor(cfg.c * std::sqrt(static_cast<double>(cfg.n))));
  K = std::clamp(K, 1, cfg.n - 1);
  struct Row {
    double lp = 0, lf = 0, dh = 0;
    int gap = 0;
  };
  std::vector<Row> rows(static_cast<std::size_t>(cfg.samples));
  RngStream base(cfg.seed);
  parallel_for(rows.size(), [&](std::size_t i) {
    RngStream rng = base.split(i);
    auto f = sample_min_factorization(cfg.n, rng);
    auto P = lam_of_partition(partial_product_partition(f, K));
    auto F = lam_of_forest(cfg.n, forest_edges(f, K));
    rows[i] = {longest_chord(P), longest_chord(F), hausdorff(F, P, HausdorffMode::chords_only),
               f.factors()[0].b - f.factors()[0].a};
  });
  std::string out = io::csv_row({"sample", "K", "longest_chord_P", "longest_chord_F", "hausdorff_F_P", "first_gap"});
  std::vector<long long> hist(static_cast<std::size_t>(cfg.max_gap) + 2, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += io::csv_row({std::to_string(i), std::to_string(K), io::fmt_double(rows[i].lp), io::fmt_double(rows[i].lf),
                        io::fmt_double(rows[i].dh), std::to_string(rows[i].gap)});
    ++hist[static_cast<std::size_t>(std::min(rows[i].gap, cfg.max_gap + 1))];
  }
  out += io::csv_row({"gap", "count", "empirical", "borel"});
  for (int g = 1; g <= cfg.max_gap + 1; ++g) {
    const auto c = hist[static_cast<std::size_t>(g)];
    double borel = 0.0;
    if (g <= cfg.max_gap) {
      borel = borel_pmf(g);
    } else {
      borel = 1.0;
      for (int i = 1; i <= cfg.max_gap; ++i) borel -= borel_pmf(i);
    }
    out += io::csv_row({g <= cfg.max_gap ? std::to_string(g) : ">" + std::to_string(cfg.max_gap), std::to_string(c),
                        io::fmt_double(static_cast<double>(c) / cfg.samples), io::fmt_double(borel)});
  }
  return out;
}

}  // namespace minfact
