#include "gaugekit/isometry.hpp"

#include "gaugekit/directions.hpp"

#include <cmath>
#include <limits>

namespace gaugekit {

AffineMap AffineMap::linear_only(Matrix m) {
  require(m.rows() == m.cols(), "affine map: linear part must be square");
  const auto d = m.rows();
  return AffineMap{std::move(m), Vector::Zero(d)};
}

AffineParts decompose_affine(const AffineMap& map) {
  require(map.linear.rows() == map.linear.cols(), "decompose_affine: linear part must be square");
  require_same_dim(map.translation.size(), map.linear.rows(), "decompose_affine");
  return {map.linear, map.translation};
}

namespace {

// Fast path: the images of V1's vertices are exactly V2's vertices.
bool vertex_sets_match(const Matrix& image, const Matrix& target, double tol) {
  if (image.cols() != target.cols()) return false;
  std::vector<bool> used(static_cast<std::size_t>(target.cols()), false);
  for (Eigen::Index i = 0; i < image.cols(); ++i) {
    bool found = false;
    for (Eigen::Index j = 0; j < target.cols() && !found; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      if ((image.col(i) - target.col(j)).cwiseAbs().maxCoeff() <= tol) {
        used[static_cast<std::size_t>(j)] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

IsometryVerdict is_gauge_isometry(const AffineMap& map, const ConvexBody& k1, const ConvexBody& k2) {
  const auto parts = decompose_affine(map);
  require_same_dim(k1.dim(), k2.dim(), "is_gauge_isometry");
  require_same_dim(parts.linear.rows(), k1.dim(), "is_gauge_isometry");
  if (!(std::abs(parts.linear.determinant()) > 1e-12))
    return {false, "linear part is singular", std::numeric_limits<double>::infinity()};

  if (k1.is_vpolytope() && k2.is_vpolytope() &&
      vertex_sets_match(parts.linear * k1.as_vpolytope().vertices, k2.as_vpolytope().vertices, default_eps()))
    return {true, "vertex sets match", 0.0};

  // h_{T0 K1}(f) = h_{K1}(T0^T f)
  double worst = 0.0;
  for (const auto& u : default_direction_set(k1.dim())) {
    const double lhs = k1.support_value(parts.linear.transpose() * u);
    worst = std::max(worst, std::abs(lhs - k2.support_value(u)));
  }
  if (worst <= default_eps()) return {true, "support functions agree", worst};
  return {false, "image of the unit ball differs from the target unit ball", worst};
}

Matrix adjoint_map(const AffineMap& map) {
  require(map.translation.cwiseAbs().maxCoeff() == 0.0, "adjoint_map: map must be linear (zero translation)");
  return map.linear.transpose();
}

Matrix dual_isometry(const Matrix& map, const SymplecticForm& form_x, const SymplecticForm& form_y) {
  require(map.rows() == form_y.dim() && map.cols() == form_x.dim(), "dual_isometry: dimension mismatch");
  require(std::abs(map.determinant()) > 1e-12, "dual_isometry: map is singular");
  // I_Y^{-1}(y) = W_Y^T y, T* = T^T, I_X(f) = W_X^{-T} f
  return form_x.inverse_transpose() * map.transpose() * form_y.matrix().transpose();
}

std::optional<AffineMap> linear_equivalence_search_2d(const ConvexBody& k1, const ConvexBody& k2) {
  require(k1.dim() == 2 && k2.dim() == 2, "linear_equivalence_search_2d: bodies must be planar");
  require(!k1.is_smooth() && !k2.is_smooth(), "linear_equivalence_search_2d: bodies must be polygons");
  const auto p = polygon_vertices(k1);
  const auto q = polygon_vertices(k2);
  const std::size_t m = p.size();
  if (m != q.size() || m < 3) return std::nullopt;

  Eigen::Matrix2d anchors;
  anchors.col(0) = p[0];
  anchors.col(1) = p[1];
  const Eigen::Matrix2d anchors_inv = anchors.inverse();

  for (int orientation : {1, -1}) {
    for (std::size_t shift = 0; shift < m; ++shift) {
      auto target = [&](std::size_t i) {
        const auto mm = static_cast<std::ptrdiff_t>(m);
        const auto idx = ((static_cast<std::ptrdiff_t>(shift) + orientation * static_cast<std::ptrdiff_t>(i)) % mm + mm) % mm;
        return q[static_cast<std::size_t>(idx)];
      };
      Eigen::Matrix2d images;
      images.col(0) = target(0);
      images.col(1) = target(1);
      const Eigen::Matrix2d t = images * anchors_inv;
      if (std::abs(t.determinant()) <= 1e-12) continue;
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) ok = (t * p[i] - target(i)).cwiseAbs().maxCoeff() <= 1e-8;
      if (ok) return AffineMap::linear_only(Matrix(t));
    }
  }
  return std::nullopt;
}

}  // namespace gaugekit
