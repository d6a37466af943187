#pragma once

namespace minfact {

// Offspring law mu(i) = a * b^i * (i+1)^(i-1) / i!.
struct OffspringParams {
  double a = 1.0;
  double b = 0.0;
  double m = 0.0;
  double variance = 0.0;
  double T = 0.0;  // tree-function value at b: T = b e^T, so log b = log T - T and a = e^-T
  int iterations = 0;
  double residual = 0.0;
};

enum class SeriesMethod { series, tree_function };

struct SeriesEval {
  double z = 0.0;
  double F = 1.0, dF = 0.0, d2F = 0.0;
  double tail_bound = 0.0;
  long terms = 0;
  SeriesMethod method = SeriesMethod::series;
};

// Tree function T(z) = sum k^(k-1) z^k / k!, the root of T e^-T = z with T < 1.
double tree_function(double z);

// Power series with a certified tail when it converges fast enough, else the tree-function route.
SeriesEval eval_F(double z);
SeriesEval eval_F_series(double z, long max_terms = 2000000);
SeriesEval eval_F_tree(double z);

// G(z) = z F'(z) / F(z) = T / (1 - T).
double G_of(double z);

OffspringParams solve_params(double m);
// Bisection on z over (1e-15, 1/e - 1e-15) with the series evaluator.
OffspringParams solve_params_bisection(double m);

double log_pmf_mu(long long i, const OffspringParams& p);
double pmf_mu(long long i, const OffspringParams& p);
double pmf_mu_tilde(long long i, const OffspringParams& p);

// log of N (N+k)^(k-1) / k!; the parameter-free part of P(S_N = k).
double log_walk_weight(long long N, long long k);
double walk_pmf(long long N, long long k, const OffspringParams& p);

double borel_pmf(long long i);

}  // namespace minfact
