#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace minfact::verify {

using json = nlohmann::ordered_json;

// Tolerances and sample sizes of the verification suites.
struct Thresholds {
  static constexpr double count_runtime_seconds = 60.0;
  static constexpr int borel_n = 10000;
  static constexpr int borel_samples = 100000;
  static constexpr double borel_tol = 0.01;
  static constexpr int uniform_draws = 100000;
  static constexpr double uniform_min_pvalue = 1e-3;
  static constexpr int tree_draws = 100000;
  static constexpr double tree_tv = 0.01;
  static constexpr double formula_tol = 1e-10;
  static constexpr double walk_rel_tol = 1e-10;
  static constexpr double density_integral_tol = 1e-6;
  static constexpr double density_identity_tol = 1e-12;
  static constexpr int ig_draws = 1000000;
  static constexpr double ig_mean_rel_tol = 0.01;
  static constexpr int scaling_n = 10000;
  static constexpr int endpoint_samples = 10000;
  static constexpr double endpoint_ks = 0.05;
  static constexpr int chord_seeds = 200;
  static constexpr double hausdorff_median = 0.1;
  static constexpr int lamination_trials = 1000;
  static constexpr int lamination_max_n = 64;
  static constexpr double llt_sup = 0.05;
};

struct Options {
  int n = 0;  // suite-specific size override; 0 keeps the defaults
  std::uint64_t seed = 20240607;
  bool include_n8 = true;
};

struct SuiteResult {
  std::string suite;
  int criterion = 0;  // 0 for supplementary suites
  bool pass = false;
  double seconds = 0.0;
  json details;
};

struct SuiteInfo {
  std::string name;
  int criterion;
  std::string summary;
};

const std::vector<SuiteInfo>& suites();
// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const Options& opts = {});
std::string suite_for_criterion(int criterion);

}  // namespace minfact::verify
