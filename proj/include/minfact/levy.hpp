#pragma once

#include <cstddef>
#include <vector>

#include "minfact/rng.hpp"

namespace minfact {

// Cadlag step path on a grid of [0, 1].
struct SampledPath {
  std::vector<double> grid;
  std::vector<double> values;

  std::size_t size() const { return grid.size(); }
};

struct ChordRelationPair {
  double s = 0.0;
  double t = 0.0;
};

std::vector<double> uniform_grid(std::size_t points);

// Increment of Y = X + c t over dt: inverse Gaussian with mean c dt and shape c^3 dt^2.
double ig_increment(double dt, double c, RngStream& rng);

double density_d(double t, double x, double c);
double density_q(double u, double x, double c);
// P(X_t <= x).
double cdf_d(double t, double x, double c);

enum class BridgeMode { discrete, rejection };

struct BridgeOptions {
  BridgeMode mode = BridgeMode::discrete;
  int n = 10000;                   // discrete mode: tree size
  long long max_attempts = 10000000;  // rejection mode budget
};

struct BridgeResult {
  SampledPath path;
  long long attempts = 0;
};

// discrete: values c * Bbar_floor(u (n-K)) / n with K = floor(c sqrt n).
// rejection: free increments reweighted by d_{1-u}(-X_u) / d_1(0) at the last interior point.
BridgeResult levy_bridge(const std::vector<double>& grid, double c, RngStream& rng,
                         const BridgeOptions& opts = {});

// Right-most minimum shift; requires a uniform grid and |end - start| <= tol.
SampledPath vervaat_continuous(const SampledPath& p, double tol = 1e-9);

SampledPath brownian_excursion_discrete(int n, RngStream& rng);

// P(max of a standard Brownian excursion <= x).
double excursion_max_cdf(double x);

}  // namespace minfact
