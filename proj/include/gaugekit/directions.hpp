#pragma once

#include "gaugekit/bodies.hpp"

#include <vector>

namespace gaugekit {

// Deterministic unit directions for support-function comparisons: equally
// spaced angles in the plane, a Halton sequence pushed through Box-Muller in
// higher dimensions.
std::vector<Vector> direction_set(Eigen::Index dim, std::size_t count);
// 512 directions in R^2, 2048 otherwise.
std::vector<Vector> default_direction_set(Eigen::Index dim);

// max over the directions of |h_A(u) - h_B(u)|.
double support_distance(const ConvexBody& a, const ConvexBody& b, const std::vector<Vector>& dirs);
double support_distance(const ConvexBody& a, const ConvexBody& b);

// Semi-decision for A == B: support functions agree on the default direction set.
bool same_body(const ConvexBody& a, const ConvexBody& b, double tol = default_eps());

}  // namespace gaugekit
