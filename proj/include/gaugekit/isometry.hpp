#pragma once

// Gauge isometries. By Mazur-Ulam an isometry is affine, its translation is
// free, and its linear part must carry one unit ball onto the other.

#include "gaugekit/bodies.hpp"
#include "gaugekit/symplectic.hpp"

#include <optional>
#include <string>

namespace gaugekit {

struct AffineMap {
  Matrix linear;
  Vector translation;

  static AffineMap linear_only(Matrix m);
  Eigen::Index dim() const { return linear.rows(); }
  Vector operator()(const Vector& x) const { return linear * x + translation; }
};

struct AffineParts {
  Matrix linear;
  Vector translation;
};

// T0(x) = T(x) - T(0), y0 = T(0).
AffineParts decompose_affine(const AffineMap& map);

struct IsometryVerdict {
  bool is_isometry = false;
  std::string diagnostic;
  double support_error = 0.0;
};

// Decides whether T is an isometry (K1 gauge) -> (K2 gauge): T0(K1) == K2.
// Agreement is judged within default_eps().
IsometryVerdict is_gauge_isometry(const AffineMap& map, const ConvexBody& k1, const ConvexBody& k2);

// Matrix of T* acting on covector coordinates: (T* f)(x) = f(T x).
Matrix adjoint_map(const AffineMap& map);

// T^w = I_X o T* o I_Y^{-1}, a map Y -> X carrying dual_body(K_Y) onto dual_body(K_X).
Matrix dual_isometry(const Matrix& map, const SymplecticForm& form_x, const SymplecticForm& form_y);

// Exhaustive search over cyclic vertex correspondences of two polygons for a
// linear T with T(K1) == K2.
std::optional<AffineMap> linear_equivalence_search_2d(const ConvexBody& k1, const ConvexBody& k2);

}  // namespace gaugekit
