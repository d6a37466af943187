#include "minfact/levy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "minfact/samplers.hpp"

namespace minfact {

std::vector<double> uniform_grid(std::size_t points) {
  if (points < 2) throw std::invalid_argument("uniform_grid: need at least 2 points");
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) g[i] = static_cast<double>(i) / static_cast<double>(points - 1);
  g.back() = 1.0;
  return g;
}

// E exp(-lambda Y_t) = exp(t c^2 (1 - sqrt(1 + 2 lambda / c))) matches the inverse
// Gaussian transform exp((shape/mean)(1 - sqrt(1 + 2 mean^2 lambda / shape))) when
// shape/mean = t c^2 and mean^2/shape = 1/c, i.e. mean = c t and shape = c^3 t^2.
double ig_increment(double dt, double c, RngStream& rng) {
  if (!(dt > 0.0) || !(c > 0.0)) throw std::invalid_argument("ig_increment: dt and c must be positive");
  const double mu = c * dt;
  const double lam = c * c * c * dt * dt;
  const double nu = rng.normal();
  const double y = nu * nu;
  const double x = mu + mu * mu * y / (2.0 * lam) - mu / (2.0 * lam) * std::sqrt(4.0 * mu * lam * y + mu * mu * y * y);
  const double u = rng.uniform01();
  return u <= mu / (mu + x) ? x : mu * mu / x;
}

double density_d(double t, double x, double c) {
  const double y = x + c * t;
  if (y <= 0.0) return 0.0;
  return std::sqrt(c * c * c * t * t / (2.0 * std::numbers::pi * y * y * y)) * std::exp(-c * x * x / (2.0 * y));
}

double density_q(double u, double x, double c) {
  if (x <= 0.0) return 0.0;
  const double r = x - u * c;
  return std::sqrt(u * u * c * c * c / (2.0 * std::numbers::pi * x * x * x)) * std::exp(-c * r * r / (2.0 * x));
}

double cdf_d(double t, double x, double c) {
  const double y = x + c * t;
  if (y <= 0.0) return 0.0;
  const double mu = c * t, lam = c * c * c * t * t;
  const double s = std::sqrt(lam / y);
  const double first = 0.5 * std::erfc(-s * (y / mu - 1.0) / std::numbers::sqrt2);
  const double tail = 0.5 * std::erfc(s * (y / mu + 1.0) / std::numbers::sqrt2);
  const double second = tail > 0.0 ? std::exp(2.0 * lam / mu + std::log(tail)) : 0.0;
  return std::clamp(first + second, 0.0, 1.0);
}

namespace {

double sup_density_d(double t, double c) {
  const double mu = c * t, lam = c * c * c * t * t;
  const double k = 1.5 * mu / lam;
  const double mode = mu * (std::sqrt(1.0 + k * k) - k);
  return density_d(t, mode - c * t, c);
}

void check_uniform(const std::vector<double>& grid) {
  if (grid.size() < 2 || grid.front() != 0.0 || grid.back() != 1.0)
    throw std::invalid_argument("grid must run from 0 to 1");
  const double h = 1.0 / static_cast<double>(grid.size() - 1);
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (std::abs(grid[i] - static_cast<double>(i) * h) > 1e-9) throw std::invalid_argument("grid must be uniform");
}

}  // namespace

BridgeResult levy_bridge(const std::vector<double>& grid, double c, RngStream& rng, const BridgeOptions& opts) {
  check_uniform(grid);
  if (!(c > 0.0)) throw std::invalid_argument("levy_bridge: c must be positive");
  BridgeResult res;
  res.path.grid = grid;
  const std::size_t m = grid.size();
  if (opts.mode == BridgeMode::discrete) {
    const int n = opts.n;
    const int K = static_cast<int>(std::floor(c * std::sqrt(static_cast<double>(n))));
    if (K < 1 || K > n - 1) throw std::invalid_argument("levy_bridge: c sqrt(n) must lie in [1, n-1]");
    auto bbar = sample_hb_bridge(n, K, rng).b_bar();
    const long long len = n - K;
    res.attempts = 1;
    res.path.values.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      auto idx = static_cast<long long>(std::floor(grid[i] * static_cast<double>(len)));
      idx = std::min(idx, len);
      const double v = idx == 0 ? 0.0 : static_cast<double>(bbar[static_cast<std::size_t>(idx - 1)]);
      res.path.values[i] = c * v / n;
    }
    return res;
  }
  if (m < 3) throw std::invalid_argument("levy_bridge: rejection mode needs an interior grid point");
  const double u = grid[m - 2];
  const double d10 = density_d(1.0, 0.0, c);
  const double bound = sup_density_d(1.0 - u, c) / d10 * 1.0001;
  std::vector<double> vals(m, 0.0);
  for (long long attempt = 1; attempt <= opts.max_attempts; ++attempt) {
    double y = 0.0;
    for (std::size_t i = 1; i + 1 < m; ++i) {
      y += ig_increment(grid[i] - grid[i - 1], c, rng);
      vals[i] = y - c * grid[i];
    }
    const double w = density_d(1.0 - u, -vals[m - 2], c) / d10;
    if (rng.uniform01() * bound < w) {
      vals[m - 1] = 0.0;
      res.path.values = vals;
      res.attempts = attempt;
      return res;
    }
  }
  throw std::runtime_error("levy_bridge: rejection budget exhausted");
}

SampledPath vervaat_continuous(const SampledPath& p, double tol) {
  check_uniform(p.grid);
  const std::size_t m = p.size();
  if (p.values.size() != m) throw std::invalid_argument("vervaat_continuous: size mismatch");
  if (std::abs(p.values.back() - p.values.front()) > tol)
    throw std::invalid_argument("vervaat_continuous: path is not a bridge");
  // Step function: value v_k on [t_k, t_{k+1}); the last grid point closes the loop.
  const std::size_t L = m - 1;
  double inf = p.values[0];
  for (std::size_t k = 0; k < L; ++k) inf = std::min(inf, p.values[k]);
  std::size_t last = 0;
  for (std::size_t k = 0; k < L; ++k)
    if (p.values[k] == inf) last = k;
  // Right-most point t with min(f(t-), f(t)) = inf is the right end of the last minimal step.
  const std::size_t shift = (last + 1) % L;
  SampledPath out;
  out.grid = p.grid;
  out.values.resize(m);
  for (std::size_t j = 0; j < L; ++j) out.values[j] = p.values[(j + shift) % L] - inf;
  out.values[L] = out.values[L - 1];
  return out;
}

SampledPath brownian_excursion_discrete(int n, RngStream& rng) {
  if (n < 2) throw std::invalid_argument("brownian_excursion_discrete: need n >= 2");
  const std::size_t L = 2 * static_cast<std::size_t>(n);
  std::vector<int> steps(L, -1);
  std::fill(steps.begin(), steps.begin() + n, 1);
  for (std::size_t i = L - 1; i > 0; --i)
    std::swap(steps[i], steps[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long long>(i)))]);
  std::vector<long long> S(L + 1, 0);
  for (std::size_t i = 0; i < L; ++i) S[i + 1] = S[i] + steps[i];
  std::size_t r = 0;
  for (std::size_t i = 1; i < L; ++i)
    if (S[i] < S[r]) r = i;
  SampledPath out;
  out.grid.resize(L + 1);
  out.values.resize(L + 1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(L));
  for (std::size_t j = 0; j <= L; ++j) {
    out.grid[j] = static_cast<double>(j) / static_cast<double>(L);
    out.values[j] = static_cast<double>(S[(j + r) % L] - S[r]) * scale;
  }
  out.values[L] = 0.0;
  return out;
}

double excursion_max_cdf(double x) {
  if (x <= 0.0) return 0.0;
  double s = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double kx2 = static_cast<double>(k) * static_cast<double>(k) * x * x;
    const double term = 2.0 * (1.0 - 4.0 * kx2) * std::exp(-2.0 * kx2);
    s += term;
    if (std::abs(term) < 1e-17) break;
  }
  return std::clamp(s, 0.0, 1.0);
}

}  // namespace minfact
