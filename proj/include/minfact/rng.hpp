#pragma once

#include <cstdint>
#include <random>

namespace minfact {

// Deterministic stream; split(k) derives an independent child stream.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  RngStream split(std::uint64_t k) const;

  std::uint64_t next_u64() { return engine_(); }
  // Uniform in [0, 1).
  double uniform01();
  // Uniform in (0, 1).
  double uniform_open();
  // Uniform integer in [lo, hi].
  long long uniform_int(long long lo, long long hi);
  double normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace minfact
