#pragma once

// Counter-based generator: draw k of stream `seed` is
// splitmix64(splitmix64((seed << 32) ^ k) ^ seed), so any draw can be
// reproduced from (seed, k) alone.

#include "gaugekit/common.hpp"

#include <cstdint>

namespace gaugekit {

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed = 0) : seed_(seed) {}

  std::uint64_t next_u64();
  // Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  Vector normal_vector(Eigen::Index dim);
  Vector unit_vector(Eigen::Index dim);
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace gaugekit
