#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace minfact {

// MINFACT_THREADS if set and positive, else the number of logical cores.
unsigned thread_count();

// Calls fn(i) for i in [0, count) over thread_count() workers.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

// sup |F_emp - F| for a sorted sample and a continuous reference cdf.
double ks_distance(const std::vector<double>& sorted, const std::function<double(double)>& cdf);
double chi_square_pvalue(double statistic, double dof);
double median(std::vector<double> v);

struct StatsConfig {
  int n = 1000;
  int K = 0;  // 0: use c
  double c = 1.0;
  int samples = 100;
  std::uint64_t seed = 1;
  int max_gap = 10;
};

// CSV with sections: per-sample rows (sample, K, longest_chord_P, longest_chord_F,
// hausdorff_F_P, first_gap) followed by the gap histogram (gap, count, empirical, borel).
std::string run_stats(const StatsConfig& cfg);

}  // namespace minfact
