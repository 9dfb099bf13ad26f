#include "gaugekit/random.hpp"

#include <cmath>
#include <numbers>

namespace gaugekit {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t CounterRng::next_u64() {
  const std::uint64_t key = (seed_ << 32) ^ counter_++;
  return splitmix64(splitmix64(key) ^ seed_);
}

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::normal() {
  // Box-Muller, one output per pair of draws.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vector CounterRng::normal_vector(Eigen::Index dim) {
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = normal();
  return v;
}

Vector CounterRng::unit_vector(Eigen::Index dim) {
  Vector v = normal_vector(dim);
  while (v.norm() < 1e-12) v = normal_vector(dim);
  return v.normalized();
}

}  // namespace gaugekit
