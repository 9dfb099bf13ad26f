#pragma once

// Convex bodies with the origin as an interior point, in three
// representations: vertex polytopes, halfspace polytopes {a_i . x <= 1} and
// quadratic smooth bodies {x^T Q x <= 1}. Every higher-level algorithm is
// written against the membership/support/gauge primitives here.

#include "gaugekit/common.hpp"
#include "gaugekit/symplectic.hpp"

#include <string>
#include <variant>
#include <vector>

namespace gaugekit {

struct VPolytope {
  Matrix vertices;  // d x m, one vertex per column
};

struct HPolytope {
  Matrix normals;  // m x d, one row a_i per facet, body = {x : a_i . x <= 1}
};

struct SmoothBody {
  Matrix q;      // symmetric positive definite
  Matrix q_inv;

  double level(const Vector& x) const { return x.dot(q * x); }
  Vector gradient(const Vector& x) const { return 2.0 * (q * x); }
};

enum class BodyKind { vpolytope, hpolytope, smooth };

struct SupportResult {
  double value = 0.0;
  Vector point;
};

struct FaceInfo {
  int face_dim = 0;
  bool smooth_at = false;
};

class ConvexBody {
 public:
  // Validating factories; throw InvalidInput when the origin is not interior.
  static ConvexBody vpolytope(Matrix vertices);
  static ConvexBody vpolytope(const std::vector<Vector>& vertices);
  static ConvexBody hpolytope(Matrix normals);
  // Rows a_i with offsets b_i > 0, normalized to a_i / b_i.
  static ConvexBody hpolytope(const Matrix& normals, const Vector& offsets);
  static ConvexBody quadratic(Matrix q);
  // Q = diag(1/r_j^2) repeated over each symplectic coordinate pair.
  static ConvexBody ellipsoid(const std::vector<double>& radii);
  static ConvexBody euclidean_ball(int dim, double radius = 1.0);

  BodyKind kind() const;
  std::string kind_name() const;
  Eigen::Index dim() const { return dim_; }

  bool is_vpolytope() const { return kind() == BodyKind::vpolytope; }
  bool is_hpolytope() const { return kind() == BodyKind::hpolytope; }
  bool is_smooth() const { return kind() == BodyKind::smooth; }
  const VPolytope& as_vpolytope() const;
  const HPolytope& as_hpolytope() const;
  const SmoothBody& as_smooth() const;

  // Minkowski functional inf{l >= 0 : x in l K}.
  double gauge(const Vector& x) const;
  bool contains(const Vector& x, double eps = default_eps()) const;
  // max{f(x) : x in K} and a maximizer.
  SupportResult support(const Covector& f) const;
  double support_value(const Vector& f) const;
  // The point t*dir on the boundary, t > 0.
  Vector boundary_ray_intersection(const Vector& dir) const;
  // x must lie on the boundary within 1e-8 (in gauge).
  FaceInfo face_query(const Vector& x) const;

  ConvexBody negated() const;
  ConvexBody scaled(double alpha) const;
  // Image under an invertible linear map.
  ConvexBody linear_image(const Matrix& map) const;

 private:
  using Payload = std::variant<VPolytope, HPolytope, SmoothBody>;
  ConvexBody(Payload p, Eigen::Index dim) : payload_(std::move(p)), dim_(dim) {}

  Payload payload_;
  Eigen::Index dim_ = 0;
};

// Counter-clockwise hull of planar points, collinear points dropped.
std::vector<Eigen::Vector2d> convex_hull_2d(std::vector<Eigen::Vector2d> points);
// Vertex polygon with its vertices in counter-clockwise hull order.
ConvexBody v_to_h_2d(const ConvexBody& body);
ConvexBody h_to_v_2d(const ConvexBody& body);
// Counter-clockwise vertex list of a planar polytope (either representation).
std::vector<Eigen::Vector2d> polygon_vertices(const ConvexBody& body);

}  // namespace gaugekit
