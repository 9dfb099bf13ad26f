#pragma once

// Characteristic flows on smooth convex boundaries. On the boundary, Jx is the
// vector with w(Jx, x) = 1 whose complement, translated to x, supports K;
// characteristics are the integral curves of J.

#include "gaugekit/bodies.hpp"
#include "gaugekit/curve.hpp"
#include "gaugekit/symplectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gaugekit {

constexpr double kDefaultIsoTol = 1e-4;

struct FlowOptions {
  double step = 1e-3;
  double max_time = 100.0;
  double closure_tol = 1e-6;
  // Minimum cosine between the tangent at closure and the initial tangent.
  double tangent_alignment = 0.999;
  // Abort when an RK4 step leaves the level set by more than this.
  double drift_limit = 1e-6;
};

struct FlowResult {
  SampledCurve curve;
  bool closed = false;
  std::optional<double> period;
  double end_time = 0.0;
  // Over the integrated trajectory; for closed flows these are A(c) and L_w(c).
  double area = 0.0;
  double dual_length = 0.0;
  // Largest |g(c) - 1| seen before the radial renormalization.
  double max_constraint_drift = 0.0;
};

// x must satisfy |g(x) - 1| <= 1e-8.
Vector j_map(const ConvexBody& body, const SymplecticForm& form, const Vector& x);

// RK4 on c' = J c with radial renormalization onto the boundary after each step.
FlowResult integrate_characteristic(const ConvexBody& body, const SymplecticForm& form, const Vector& start,
                                    const FlowOptions& options = {});

// (1/2) * integral of w(c', c); the curve must be closed and positively parametrized.
double symplectic_area(const SymplecticForm& form, const SampledCurve& curve);

struct IsoperimetricReport {
  double area = 0.0;
  double dual_length = 0.0;
  double ratio = 0.0;  // 2A / L_w
  bool inequality_holds = false;  // ratio <= 1 + 1e-6
  bool is_characteristic = false;  // |ratio - 1| <= iso_tol
};

IsoperimetricReport isoperimetric_report(const ConvexBody& body, const SymplecticForm& form, const SampledCurve& curve,
                                         double iso_tol = kDefaultIsoTol);

// |J^w(Jx) + x| where J^w is the J map of the dual body.
double jj_involution_check(const ConvexBody& body, const SymplecticForm& form, const Vector& x);

// K ∩ Y in (u, v) coordinates of the plane.
ConvexBody section_body(const ConvexBody& body, const PlaneSubspace& plane);

// proj_Y(K^w) along the complement of Y, in (u, v) coordinates.
ConvexBody projected_dual_body(const ConvexBody& body, const SymplecticForm& form, const PlaneSubspace& plane);

struct SectionDuality {
  ConvexBody lhs;  // (K ∩ Y)^w under w restricted to Y
  ConvexBody rhs;  // proj_Y(K^w)
  double hausdorff = 0.0;
};

SectionDuality section_duality_check(const ConvexBody& body, const SymplecticForm& form, const PlaneSubspace& plane);

struct PlanarCharacteristic {
  bool is_characteristic = false;  // (K ∩ Y)^w == K^w ∩ Y within 1e-8
  double support_gap = 0.0;
  double out_of_plane_drift = 0.0;  // along a flow started on the boundary of K ∩ Y
  bool flow_stays_in_plane = false;
  bool flow_agrees = false;
};

PlanarCharacteristic planar_characteristic_check(const ConvexBody& body, const SymplecticForm& form,
                                                 const PlaneSubspace& plane, const FlowOptions& options = {1e-3, 30.0});

struct CapacityEstimate {
  std::optional<double> capacity;  // min area over closed characteristics found
  double min_half_dual_length = 0.0;
  bool lengths_agree = false;
  std::size_t closed_count = 0;
  std::size_t flow_count = 0;
  bool heuristic = false;  // some flows did not close
  std::vector<double> areas;
  std::vector<std::string> diagnostics;
};

// Seeds: the given starts plus boundary points on the coordinate axes and the
// eigen-axes of Q, in both orientations.
CapacityEstimate capacity_estimate(const ConvexBody& body, const SymplecticForm& form,
                                   const std::vector<Vector>& starts, const FlowOptions& options = {},
                                   double iso_tol = kDefaultIsoTol);

}  // namespace gaugekit
