#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "minfact/levy.hpp"
#include "minfact/rng.hpp"
#include "minfact/stats.hpp"

using namespace minfact;

namespace {

// Cumulative trapezoid of a density on [lo, hi].
struct NumericCdf {
  double lo, h;
  std::vector<double> cdf;

  NumericCdf(const std::function<double(double)>& f, double lo_, double hi, int steps) : lo(lo_), h((hi - lo_) / steps) {
    cdf.assign(static_cast<std::size_t>(steps) + 1, 0.0);
    double prev = f(lo);
    for (int i = 1; i <= steps; ++i) {
      const double cur = f(lo + h * i);
      cdf[static_cast<std::size_t>(i)] = cdf[static_cast<std::size_t>(i - 1)] + 0.5 * h * (prev + cur);
      prev = cur;
    }
    for (double& v : cdf) v /= cdf.back();
  }
  double operator()(double x) const {
    if (x <= lo) return 0.0;
    const double pos = (x - lo) / h;
    const auto i = static_cast<std::size_t>(pos);
    if (i + 1 >= cdf.size()) return 1.0;
    return cdf[i] + (pos - static_cast<double>(i)) * (cdf[i + 1] - cdf[i]);
  }
};

}  // namespace

TEST_CASE("density values") {
  for (double c : {0.5, 1.0, 5.0}) {
    CHECK(density_d(1.0, 0.0, c) == doctest::Approx(1.0 / std::sqrt(2 * std::numbers::pi)));
    CHECK(density_q(1.0, c, c) == doctest::Approx(1.0 / std::sqrt(2 * std::numbers::pi)));
    CHECK(density_d(1.0, -c - 1e-9, c) == 0.0);
    CHECK(density_d(0.3, -0.3 * c - 0.1, c) == 0.0);
    CHECK(density_q(0.5, 0.0, c) == 0.0);
    CHECK(density_q(0.5, -1.0, c) == 0.0);
  }
}

TEST_CASE("q and d identity") {
  for (double c : {0.7, 3.0})
    for (double u : {0.2, 0.5, 0.8})
      for (double x = -c * (1 - u) + 0.01; x < 6.0; x += 0.1)
        CHECK(std::abs(density_q(1 - u, x + c * (1 - u), c) - density_d(1 - u, x, c)) < 1e-12);
}

TEST_CASE("cdf_d matches the integrated density") {
  for (double c : {1.0, 5.0}) {
    NumericCdf F([&](double x) { return density_d(1.0, x, c); }, -c, 60.0, 400000);
    for (double x : {-0.5 * c, 0.0, 0.5, 2.0, 10.0}) CHECK(std::abs(cdf_d(1.0, x, c) - F(x)) < 1e-5);
  }
}

TEST_CASE("inverse Gaussian increments") {
  RngStream rng(17);
  const double c = 5.0, dt = 0.01;
  double sum = 0;
  const int draws = 1000000;
  bool nonneg = true;
  for (int i = 0; i < draws; ++i) {
    const double y = ig_increment(dt, c, rng);
    nonneg = nonneg && y >= 0.0;
    sum += y;
  }
  CHECK(nonneg);
  CHECK(std::abs(sum / draws - c * dt) < 0.01 * c * dt);
}

TEST_CASE("X_1 = Y_1 - c has density d_1") {
  RngStream rng(23);
  for (double c : {1.0, 5.0}) {
    std::vector<double> xs;
    for (int i = 0; i < 100000; ++i) xs.push_back(ig_increment(1.0, c, rng) - c);
    std::sort(xs.begin(), xs.end());
    CHECK(ks_distance(xs, [&](double x) { return cdf_d(1.0, x, c); }) < 0.01);
    double mean = 0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    // Var X_1 = 1 / c.
    CHECK(std::abs(mean) < 3 * std::sqrt(1.0 / c / static_cast<double>(xs.size())));
  }
}

TEST_CASE("discrete bridge follows the scaled path") {
  RngStream rng(2);
  const auto grid = uniform_grid(101);
  const double c = 1.0;
  const auto r = levy_bridge(grid, c, rng, BridgeOptions{BridgeMode::discrete, 400, 1});
  CHECK(r.path.values.front() == 0.0);
  CHECK(std::abs(r.path.values.back()) <= c / 400 + 1e-12);
  CHECK_THROWS_AS(levy_bridge({0.0, 0.3, 1.0}, c, rng), std::invalid_argument);
}

TEST_CASE("rejection bridge marginal at u = 1/2") {
  RngStream rng(31);
  const double c = 5.0;
  const std::vector<double> grid{0.0, 0.5, 1.0};
  std::vector<double> xs;
  for (int i = 0; i < 10000; ++i) {
    const auto r = levy_bridge(grid, c, rng, BridgeOptions{BridgeMode::rejection, 0, 100000});
    CHECK(r.path.values.back() == 0.0);
    xs.push_back(r.path.values[1]);
  }
  std::sort(xs.begin(), xs.end());
  const double d10 = density_d(1.0, 0.0, c);
  NumericCdf F([&](double x) { return density_d(0.5, x, c) * density_d(0.5, -x, c) / d10; }, -0.5 * c, 0.5 * c, 200000);
  CHECK(ks_distance(xs, F) < 0.02);
}

TEST_CASE("continuous Vervaat transform") {
  const auto grid = uniform_grid(4);
  SampledPath zero{grid, {0, 0, 0, 0}};
  CHECK(vervaat_continuous(zero).values == std::vector<double>{0, 0, 0, 0});
  SampledPath jump{grid, {0, -1, 1, 0}};
  CHECK(vervaat_continuous(jump).values == std::vector<double>{2, 1, 0, 0});
  SampledPath tail{grid, {0, 1, -1, 0}};
  const auto v = vervaat_continuous(tail);
  CHECK(v.values == std::vector<double>{1, 2, 0, 0});
  CHECK(*std::min_element(v.values.begin(), v.values.end()) == 0.0);
  SampledPath bad{grid, {0, 1, 2, 3}};
  CHECK_THROWS_AS(vervaat_continuous(bad), std::invalid_argument);
}

TEST_CASE("excursions built from Levy bridges are nonnegative") {
  RngStream rng(12);
  const auto grid = uniform_grid(201);
  for (int i = 0; i < 20; ++i) {
    const auto br = levy_bridge(grid, 2.0, rng, BridgeOptions{BridgeMode::discrete, 2000, 1});
    SampledPath p = br.path;
    p.values.back() = p.values.front();
    const auto e = vervaat_continuous(p, 1e-2);
    CHECK(*std::min_element(e.values.begin(), e.values.end()) == doctest::Approx(0.0));
  }
}

TEST_CASE("Brownian excursion") {
  RngStream rng(19);
  CHECK(excursion_max_cdf(0.0) == 0.0);
  CHECK(excursion_max_cdf(5.0) == doctest::Approx(1.0));
  std::vector<double> maxima;
  for (int i = 0; i < 2000; ++i) {
    const auto e = brownian_excursion_discrete(2000, rng);
    CHECK(*std::min_element(e.values.begin(), e.values.end()) >= 0.0);
    CHECK(e.values.back() == 0.0);
    CHECK(e.values.front() == 0.0);
    maxima.push_back(*std::max_element(e.values.begin(), e.values.end()));
  }
  std::sort(maxima.begin(), maxima.end());
  CHECK(ks_distance(maxima, excursion_max_cdf) < 0.05);
  CHECK_THROWS_AS(brownian_excursion_discrete(1, rng), std::invalid_argument);
}
