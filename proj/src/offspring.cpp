#include "minfact/offspring.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace minfact {

namespace {

constexpr double kInvE = 0.36787944117144233;

void check_z(double z) {
  if (!(z >= 0.0 && z < kInvE)) throw std::domain_error("eval_F: z outside [0, 1/e)");
}

}  // namespace

double tree_function(double z) {
  check_z(z);
  if (z == 0.0) return 0.0;
  // ln T - T is increasing on (0, 1).
  const double target = std::log(z);
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (std::log(mid) - mid < target) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

SeriesEval eval_F_series(double z, long max_terms) {
  check_z(z);
  SeriesEval r;
  r.z = z;
  r.method = SeriesMethod::series;
  if (z == 0.0) {
    r.F = 1.0; r.dF = 1.0; r.d2F = 3.0; r.terms = 1;
    return r;
  }
  const double lz = std::log(z);
  const double ratio = std::numbers::e * z;
  double F = 0.0, dF = 0.0, d2F = 0.0;
  long k = 0;
  for (; k < max_terms; ++k) {
    const auto kd = static_cast<double>(k);
    // c_k z^k with c_k = (k+1)^(k-1)/k!.
    double term = std::exp((kd - 1.0) * std::log(kd + 1.0) - std::lgamma(kd + 1.0) + kd * lz);
    F += term;
    dF += kd * term / z;
    d2F += kd * (kd - 1.0) * term / (z * z);
    if (k < 2) continue;
    // (k+1)^(k-1)/k! <= e^(k+1) / (sqrt(2 pi k) (k+1)) by Stirling, so the
    // tail from K = k+1 is dominated by a geometric series in e z.
    const double K = kd + 1.0;
    const double rK = std::exp(K * std::log(ratio));
    const double base = std::numbers::e / std::sqrt(2.0 * std::numbers::pi * K);
    const double t0 = base * rK / ((K + 1.0) * (1.0 - ratio));
    const double t1 = base * rK / (z * (1.0 - ratio));
    const double t2 = base / (z * z) * (K * rK / (1.0 - ratio) + rK * ratio / ((1.0 - ratio) * (1.0 - ratio)));
    if (t0 <= 1e-15 * F && t1 <= 1e-15 * dF && t2 <= 1e-15 * d2F) {
      r.tail_bound = std::max({t0 / F, t1 / dF, t2 / d2F});
      ++k;
      break;
    }
    r.tail_bound = std::numeric_limits<double>::infinity();
  }
  r.F = F; r.dF = dF; r.d2F = d2F; r.terms = k;
  return r;
}

SeriesEval eval_F_tree(double z) {
  check_z(z);
  if (z == 0.0) return eval_F_series(0.0);
  SeriesEval r;
  r.z = z;
  r.method = SeriesMethod::tree_function;
  const double T = tree_function(z);
  const double h = T / (1.0 - T);
  const double dT = T / (z * (1.0 - T));
  const double g = h / z;
  const double dg = dT / ((1.0 - T) * (1.0 - T)) / z - h / (z * z);
  r.F = std::exp(T);
  r.dF = r.F * g;
  r.d2F = r.F * (g * g + dg);
  return r;
}

SeriesEval eval_F(double z) {
  check_z(z);
  // The certified series needs about log(1e-15)/log(e z) terms.
  if (std::numbers::e * z < 0.999) {
    auto s = eval_F_series(z);
    if (std::isfinite(s.tail_bound)) return s;
  }
  return eval_F_tree(z);
}

double G_of(double z) {
  const double T = tree_function(z);
  return T / (1.0 - T);
}

OffspringParams solve_params(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw std::invalid_argument("solve_params: mean must be positive");
  OffspringParams p;
  p.m = m;
  p.T = m / (1.0 + m);
  p.b = p.T * std::exp(-p.T);
  p.a = std::exp(-p.T);
  p.variance = p.T / std::pow(1.0 - p.T, 3);
  p.residual = std::abs(p.T / (1.0 - p.T) - m);
  return p;
}

OffspringParams solve_params_bisection(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw std::invalid_argument("solve_params: mean must be positive");
  double lo = 1e-15, hi = kInvE - 1e-15;
  OffspringParams p;
  p.m = m;
  SeriesEval e;
  double z = lo;
  for (int it = 1; it <= 200; ++it) {
    z = 0.5 * (lo + hi);
    e = eval_F(z);
    const double G = z * e.dF / e.F;
    p.iterations = it;
    p.residual = std::abs(G - m);
    if (p.residual <= 1e-10) break;
    if (G < m) lo = z; else hi = z;
  }
  if (p.residual > 1e-10 && p.residual > 1e-10 * m * m * m)
    throw std::runtime_error("solve_params_bisection: no convergence, residual " + std::to_string(p.residual));
  p.b = z;
  p.a = 1.0 / e.F;
  p.variance = z * z * e.d2F / e.F + m - m * m;
  p.T = std::log(e.F);
  return p;
}

double log_pmf_mu(long long i, const OffspringParams& p) {
  if (i < 0) return -std::numeric_limits<double>::infinity();
  const auto d = static_cast<double>(i);
  return std::log(p.a) + d * std::log(p.b) + (d - 1.0) * std::log(d + 1.0) - std::lgamma(d + 1.0);
}

double pmf_mu(long long i, const OffspringParams& p) { return std::exp(log_pmf_mu(i, p)); }

double pmf_mu_tilde(long long i, const OffspringParams& p) {
  return i <= 0 ? 0.0 : pmf_mu(i - 1, p);
}

double log_walk_weight(long long N, long long k) {
  if (N < 0 || k < 0) return -std::numeric_limits<double>::infinity();
  if (N == 0) return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  const auto n = static_cast<double>(N), kd = static_cast<double>(k);
  return std::log(n) + (kd - 1.0) * std::log(n + kd) - std::lgamma(kd + 1.0);
}

double walk_pmf(long long N, long long k, const OffspringParams& p) {
  const double lw = log_walk_weight(N, k);
  if (!std::isfinite(lw)) return 0.0;
  return std::exp(static_cast<double>(N) * std::log(p.a) + static_cast<double>(k) * std::log(p.b) + lw);
}

double borel_pmf(long long i) {
  if (i < 1) throw std::domain_error("borel_pmf: i must be positive");
  const auto d = static_cast<double>(i);
  return std::exp((d - 2.0) * std::log(d) - std::lgamma(d) - d);
}

}  // namespace minfact
