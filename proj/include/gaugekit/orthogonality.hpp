#pragma once

// Birkhoff-type orthogonality for gauges: x ⊣ y iff gauge(x) <= gauge(x + t y)
// for every t. The relation is neither symmetric nor invariant under x -> -x.

#include "gaugekit/gauge.hpp"
#include "gaugekit/symplectic.hpp"

#include <vector>

namespace gaugekit {

constexpr double kDefaultOrthoTol = 1e-8;

struct OrthogonalityReport {
  double t_star = 0.0;
  double min_value = 0.0;
  double gauge_x = 0.0;
  bool is_orthogonal = false;
  Vector witness;  // x / gauge(x)
};

LineMinimum min_gauge_on_line(const Gauge& gauge, const Vector& x, const Vector& y);

// tol is relative: orthogonal iff min_t gauge(x + t y) >= gauge(x) - tol * max(1, gauge(x)).
OrthogonalityReport is_orthogonal(const Gauge& gauge, const Vector& x, const Vector& y,
                                  double tol = kDefaultOrthoTol);

struct HyperplaneOrthogonality {
  double min_value = 0.0;  // min of gauge over x + span(H)
  double gauge_x = 0.0;
  bool is_orthogonal = false;
};

// Joint test over the affine hyperplane x + span(H); H is d x (d-1), one basis vector per column.
HyperplaneOrthogonality hyperplane_orthogonality(const Gauge& gauge, const Vector& x, const Matrix& hyperplane,
                                                 double tol = kDefaultOrthoTol);
bool is_orthogonal_to_hyperplane(const Gauge& gauge, const Vector& x, const Matrix& hyperplane,
                                 double tol = kDefaultOrthoTol);
Matrix hyperplane_from_vectors(const std::vector<Vector>& basis);

struct SupportPair {
  Vector plus;
  Vector minus;
};

// The two unit-sphere points where translates of H support the unit ball.
SupportPair support_pair_for_hyperplane(const Gauge& gauge, const Matrix& hyperplane);

// y0 on the unit sphere with w(x, y0) = dual gauge of x; y0 ⊣ {x}^perp.
Vector dual_attainment_point(const ConvexBody& body, const SymplecticForm& form, const Vector& x);

// The d x (d-1) basis of {x}^perp = {z : w(x, z) = 0}.
Matrix complement_hyperplane(const SymplecticForm& form, const Vector& x);

}  // namespace gaugekit
