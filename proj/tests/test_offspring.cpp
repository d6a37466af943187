#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "minfact/offspring.hpp"
#include "minfact/oracle.hpp"

using namespace minfact;

TEST_CASE("F at 0 and near the singularity") {
  CHECK(eval_F(0.0).F == doctest::Approx(1.0));
  const double z = std::exp(-1.0) - 1e-8;
  CHECK(std::abs(eval_F(z).F - std::numbers::e) < 1e-3);
  CHECK_THROWS_AS(eval_F(0.5), std::domain_error);
  CHECK_THROWS_AS(eval_F(-0.1), std::domain_error);
}

TEST_CASE("series and tree-function routes agree") {
  for (double z : {0.05, 0.2, 0.3}) {
    const auto s = eval_F_series(z);
    const auto t = eval_F_tree(z);
    CHECK(std::abs(s.F - t.F) < 1e-12);
    CHECK(std::abs(s.dF - t.dF) < 1e-10 * t.dF);
    CHECK(s.tail_bound < 1e-14 * s.F);
  }
}

TEST_CASE("solve_params at m = 1") {
  const auto p = solve_params(1.0);
  CHECK(p.b == doctest::Approx(std::exp(-0.5) / 2).epsilon(1e-12));
  CHECK(p.a == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
  const auto q = solve_params_bisection(1.0);
  CHECK(q.b == doctest::Approx(p.b).epsilon(1e-9));
  CHECK(q.a == doctest::Approx(p.a).epsilon(1e-9));
  CHECK(q.variance == doctest::Approx(p.variance).epsilon(1e-6));
}

TEST_CASE("closed form and bisection agree over a range of means") {
  for (double m : {0.01, 0.1, 0.5, 2.0, 10.0}) {
    const auto p = solve_params(m);
    const auto q = solve_params_bisection(m);
    CHECK(std::abs(G_of(q.b) - m) <= 1e-10 * std::max(1.0, m));
    CHECK(q.b == doctest::Approx(p.b).epsilon(1e-8));
    CHECK(q.variance == doctest::Approx(p.variance).epsilon(1e-5));
  }
}

TEST_CASE("small means give b near 0 and a near 1") {
  const auto p = solve_params(1e-9);
  CHECK(p.b < 1e-8);
  CHECK(p.a > 1 - 1e-8);
  CHECK_THROWS_AS(solve_params(0.0), std::invalid_argument);
}

TEST_CASE("variance scales like K / n") {
  const double n = 1e6, K = std::floor(std::sqrt(n));
  const auto p = solve_params((K + 1) / (n - K));
  CHECK(std::abs(p.variance / (K / n) - 1.0) < 0.05);
}

TEST_CASE("normalization and mean of the offspring law") {
  for (double m : {0.2, 1.0, 3.0}) {
    const auto p = solve_params(m);
    double total = 0, mean = 0, second = 0;
    for (int i = 0; i <= 20000; ++i) {
      const double w = pmf_mu(i, p);
      total += w;
      mean += i * w;
      second += static_cast<double>(i) * i * w;
    }
    if (m <= 1.0) {
      CHECK(std::abs(total - 1.0) < 1e-10);
      CHECK(std::abs(mean - m) < 1e-8);
      CHECK(std::abs(second - mean * mean - p.variance) < 1e-6);
    } else {
      CHECK(std::abs(total - 1.0) < 1e-6);
    }
  }
  const auto p = solve_params(1.0);
  CHECK(pmf_mu(0, p) == doctest::Approx(p.a));
  CHECK(pmf_mu(1, p) == doctest::Approx(p.a * p.b));
  CHECK(pmf_mu_tilde(0, p) == 0.0);
  CHECK(pmf_mu_tilde(1, p) == doctest::Approx(p.a));
  CHECK(pmf_mu_tilde(2, p) == doctest::Approx(p.a * p.b));
}

TEST_CASE("G is increasing") {
  double prev = 0.0;
  for (int i = 1; i < 1000; ++i) {
    const double g = G_of(std::exp(-1.0) * i / 1000.0);
    CHECK(g > prev);
    prev = g;
  }
}

TEST_CASE("walk pmf closed form") {
  const auto p = solve_params(0.7);
  for (int k = 0; k < 10; ++k) CHECK(walk_pmf(1, k, p) == doctest::Approx(pmf_mu(k, p)).epsilon(1e-12));
  CHECK(walk_pmf(4, 0, p) == doctest::Approx(std::pow(p.a, 4)).epsilon(1e-12));
  CHECK(walk_pmf(2, 2, p) == doctest::Approx(4 * p.a * p.a * p.b * p.b).epsilon(1e-12));
  for (int N = 1; N <= 6; ++N) {
    const auto conv = oracle::convolution_walk(p, N, 10);
    for (int k = 0; k <= 10; ++k)
      CHECK(std::abs(walk_pmf(N, k, p) - conv[static_cast<std::size_t>(k)]) <= 1e-10 * conv[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("Borel law") {
  CHECK(borel_pmf(1) == doctest::Approx(0.367879).epsilon(1e-6));
  CHECK(borel_pmf(2) == doctest::Approx(0.135335).epsilon(1e-6));
  double s = 0;
  for (int i = 1; i <= 10000; ++i) s += borel_pmf(i);
  // Tail beyond N is about sqrt(2 / (pi N)).
  CHECK(s < 1.0);
  CHECK(1.0 - s < std::sqrt(2.0 / (std::numbers::pi * 10000)));
  CHECK_THROWS_AS(borel_pmf(0), std::domain_error);
}
