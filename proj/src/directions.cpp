#include "gaugekit/directions.hpp"

#include <cmath>
#include <numbers>

namespace gaugekit {

namespace {

double radical_inverse(std::size_t index, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

}  // namespace

std::vector<Vector> direction_set(Eigen::Index dim, std::size_t count) {
  require(dim >= 2, "direction_set: dimension must be >= 2");
  std::vector<Vector> dirs;
  dirs.reserve(count);
  if (dim == 2) {
    for (std::size_t k = 0; k < count; ++k) {
      const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
      dirs.emplace_back(Eigen::Vector2d(std::cos(a), std::sin(a)));
    }
    return dirs;
  }
  const auto pairs = static_cast<std::size_t>((dim + 1) / 2);
  require(2 * pairs <= std::size(kPrimes), "direction_set: dimension too large");
  for (std::size_t k = 1; dirs.size() < count; ++k) {
    Vector v(dim);
    for (std::size_t p = 0; p < pairs; ++p) {
      const double u1 = radical_inverse(k, kPrimes[2 * p]);
      const double u2 = radical_inverse(k, kPrimes[2 * p + 1]);
      const double r = std::sqrt(-2.0 * std::log(1.0 - u1 + 1e-300));
      const auto i = static_cast<Eigen::Index>(2 * p);
      v(i) = r * std::cos(2.0 * std::numbers::pi * u2);
      if (i + 1 < dim) v(i + 1) = r * std::sin(2.0 * std::numbers::pi * u2);
    }
    if (v.norm() > 1e-6) dirs.push_back(v.normalized());
  }
  return dirs;
}

std::vector<Vector> default_direction_set(Eigen::Index dim) { return direction_set(dim, dim == 2 ? 512 : 2048); }

double support_distance(const ConvexBody& a, const ConvexBody& b, const std::vector<Vector>& dirs) {
  require_same_dim(a.dim(), b.dim(), "support_distance");
  double worst = 0.0;
  for (const auto& u : dirs) worst = std::max(worst, std::abs(a.support_value(u) - b.support_value(u)));
  return worst;
}

double support_distance(const ConvexBody& a, const ConvexBody& b) {
  return support_distance(a, b, default_direction_set(a.dim()));
}

bool same_body(const ConvexBody& a, const ConvexBody& b, double tol) {
  return a.dim() == b.dim() && support_distance(a, b) <= tol;
}

}  // namespace gaugekit
