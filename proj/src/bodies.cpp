#include "gaugekit/bodies.hpp"

#include "gaugekit/lp.hpp"

#include <algorithm>
#include <cmath>

namespace gaugekit {

namespace {

constexpr double kBoundaryTol = 1e-8;
constexpr double kInteriorMargin = 1e-9;

Eigen::Index matrix_rank(const Matrix& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++r;
  return r;
}

void validate_vertices(const Matrix& v) {
  const auto d = v.rows();
  const auto m = v.cols();
  require(d >= 2, "vpolytope: dimension must be >= 2");
  require(v.allFinite(), "vpolytope: non-finite vertex");
  require(m >= d + 1, "vpolytope: need at least d+1 vertices");
  Matrix diffs = v.rightCols(m - 1).colwise() - v.col(0);
  require(matrix_rank(diffs, 1e-10 * std::max(1.0, diffs.cwiseAbs().maxCoeff())) == d,
          "vpolytope: vertices are not affinely spanning");

  // Origin strictly interior: 0 = sum c_j v_j, sum c_j = 1, c_j >= margin.
  // Shift c = c' + margin so the LP runs over c' >= 0.
  lp::Problem p(m);
  for (Eigen::Index i = 0; i < d; ++i) p.add_eq(v.row(i).transpose(), -kInteriorMargin * v.row(i).sum());
  p.add_eq(Vector::Ones(m), 1.0 - kInteriorMargin * static_cast<double>(m));
  require(lp::solve(p).optimal(), "vpolytope: origin is not an interior point");
}

void validate_normals(const Matrix& a) {
  const auto d = a.cols();
  require(d >= 2, "hpolytope: dimension must be >= 2");
  require(a.rows() >= d + 1, "hpolytope: need at least d+1 halfspaces");
  require(a.allFinite(), "hpolytope: non-finite normal");
  for (Eigen::Index j = 0; j < d; ++j) {
    for (double sign : {1.0, -1.0}) {
      lp::Problem p(d);
      for (Eigen::Index k = 0; k < d; ++k) p.set_free(k);
      p.objective(j) = -sign;
      for (Eigen::Index i = 0; i < a.rows(); ++i) p.add_le(a.row(i).transpose(), 1.0);
      require(lp::solve(p).optimal(), "hpolytope: body is unbounded");
    }
  }
}

double vertex_gauge(const Matrix& v, const Vector& x) {
  const auto m = v.cols();
  lp::Problem p(m);
  p.objective.setOnes();
  for (Eigen::Index i = 0; i < v.rows(); ++i) p.add_eq(v.row(i).transpose(), x(i));
  const auto sol = lp::solve(p);
  if (!sol.optimal()) throw NumericalFailure("vpolytope gauge: LP failed");
  return std::max(sol.value, 0.0);
}

}  // namespace

ConvexBody ConvexBody::vpolytope(Matrix vertices) {
  validate_vertices(vertices);
  const auto d = vertices.rows();
  return ConvexBody(VPolytope{std::move(vertices)}, d);
}

ConvexBody ConvexBody::vpolytope(const std::vector<Vector>& vertices) {
  require(!vertices.empty(), "vpolytope: no vertices");
  Matrix v(vertices.front().size(), static_cast<Eigen::Index>(vertices.size()));
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    require_same_dim(vertices[j].size(), v.rows(), "vpolytope");
    v.col(static_cast<Eigen::Index>(j)) = vertices[j];
  }
  return vpolytope(std::move(v));
}

ConvexBody ConvexBody::hpolytope(Matrix normals) {
  validate_normals(normals);
  const auto d = normals.cols();
  return ConvexBody(HPolytope{std::move(normals)}, d);
}

ConvexBody ConvexBody::hpolytope(const Matrix& normals, const Vector& offsets) {
  require_same_dim(normals.rows(), offsets.size(), "hpolytope offsets");
  Matrix a = normals;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    require(offsets(i) > 0.0, "hpolytope: non-positive offset, origin not interior");
    a.row(i) /= offsets(i);
  }
  return hpolytope(std::move(a));
}

ConvexBody ConvexBody::quadratic(Matrix q) {
  require(q.rows() == q.cols() && q.rows() >= 2, "quadratic body: Q must be square, dim >= 2");
  require(q.allFinite(), "quadratic body: non-finite entries");
  require((q - q.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, q.cwiseAbs().maxCoeff()),
          "quadratic body: Q must be symmetric");
  q = 0.5 * (q + q.transpose());
  Eigen::LLT<Matrix> llt(q);
  require(llt.info() == Eigen::Success, "quadratic body: Q is not positive definite");
  Matrix q_inv = llt.solve(Matrix::Identity(q.rows(), q.cols()));
  q_inv = 0.5 * (q_inv + q_inv.transpose());
  const auto d = q.rows();
  return ConvexBody(SmoothBody{std::move(q), std::move(q_inv)}, d);
}

ConvexBody ConvexBody::ellipsoid(const std::vector<double>& radii) {
  require(!radii.empty(), "ellipsoid: no radii");
  const auto n = static_cast<Eigen::Index>(radii.size());
  Vector diag(2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double r = radii[static_cast<std::size_t>(j)];
    require(r > 0.0 && std::isfinite(r), "ellipsoid: radii must be positive");
    diag(2 * j) = diag(2 * j + 1) = 1.0 / (r * r);
  }
  return quadratic(diag.asDiagonal());
}

ConvexBody ConvexBody::euclidean_ball(int dim, double radius) {
  require(dim >= 2 && radius > 0.0, "euclidean_ball: invalid arguments");
  return quadratic(Matrix::Identity(dim, dim) / (radius * radius));
}

BodyKind ConvexBody::kind() const { return static_cast<BodyKind>(payload_.index()); }

std::string ConvexBody::kind_name() const {
  switch (kind()) {
    case BodyKind::vpolytope: return "vpolytope";
    case BodyKind::hpolytope: return "hpolytope";
    case BodyKind::smooth: return "quadratic";
  }
  return "unknown";
}

const VPolytope& ConvexBody::as_vpolytope() const {
  require(is_vpolytope(), "body is not a vertex polytope");
  return std::get<VPolytope>(payload_);
}
const HPolytope& ConvexBody::as_hpolytope() const {
  require(is_hpolytope(), "body is not a halfspace polytope");
  return std::get<HPolytope>(payload_);
}
const SmoothBody& ConvexBody::as_smooth() const {
  require(is_smooth(), "body is not smooth");
  return std::get<SmoothBody>(payload_);
}

double ConvexBody::gauge(const Vector& x) const {
  require_same_dim(x.size(), dim_, "gauge");
  switch (kind()) {
    case BodyKind::vpolytope: return vertex_gauge(as_vpolytope().vertices, x);
    case BodyKind::hpolytope: return std::max(0.0, (as_hpolytope().normals * x).maxCoeff());
    case BodyKind::smooth: return std::sqrt(std::max(0.0, as_smooth().level(x)));
  }
  return 0.0;
}

bool ConvexBody::contains(const Vector& x, double eps) const { return gauge(x) <= 1.0 + eps; }

SupportResult ConvexBody::support(const Covector& f) const {
  require_same_dim(f.dim(), dim_, "support");
  require(f.coords.cwiseAbs().maxCoeff() > 0.0, "support: zero covector");
  switch (kind()) {
    case BodyKind::vpolytope: {
      const auto& v = as_vpolytope().vertices;
      Eigen::Index best = 0;
      const Vector values = v.transpose() * f.coords;
      values.maxCoeff(&best);
      return {values(best), v.col(best)};
    }
    case BodyKind::hpolytope: {
      const auto& a = as_hpolytope().normals;
      lp::Problem p(dim_);
      for (Eigen::Index k = 0; k < dim_; ++k) p.set_free(k);
      p.objective = -f.coords;
      for (Eigen::Index i = 0; i < a.rows(); ++i) p.add_le(a.row(i).transpose(), 1.0);
      const auto sol = lp::solve(p);
      if (!sol.optimal()) throw NumericalFailure("hpolytope support: LP failed");
      return {f.coords.dot(sol.x), sol.x};
    }
    case BodyKind::smooth: {
      const auto& s = as_smooth();
      const Vector qf = s.q_inv * f.coords;
      const double value = std::sqrt(f.coords.dot(qf));
      return {value, qf / value};
    }
  }
  return {};
}

double ConvexBody::support_value(const Vector& f) const {
  if (kind() == BodyKind::smooth) {
    require_same_dim(f.size(), dim_, "support");
    return std::sqrt(std::max(0.0, f.dot(as_smooth().q_inv * f)));
  }
  if (kind() == BodyKind::vpolytope) {
    require_same_dim(f.size(), dim_, "support");
    return (as_vpolytope().vertices.transpose() * f).maxCoeff();
  }
  if (f.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  return support(Covector(f)).value;
}

Vector ConvexBody::boundary_ray_intersection(const Vector& dir) const {
  require_same_dim(dir.size(), dim_, "boundary_ray_intersection");
  require(dir.cwiseAbs().maxCoeff() > 0.0, "boundary_ray_intersection: zero direction");
  return dir / gauge(dir);
}

FaceInfo ConvexBody::face_query(const Vector& x) const {
  const double g = gauge(x);
  require(std::abs(g - 1.0) <= kBoundaryTol, "face_query: point is not on the boundary");
  const Vector xb = x / g;
  switch (kind()) {
    case BodyKind::smooth: return {0, true};
    case BodyKind::hpolytope: {
      const auto& a = as_hpolytope().normals;
      const Vector slack = a * xb;
      std::vector<Eigen::Index> active;
      for (Eigen::Index i = 0; i < a.rows(); ++i)
        if (std::abs(slack(i) - 1.0) <= kBoundaryTol) active.push_back(i);
      Matrix rows(static_cast<Eigen::Index>(active.size()), dim_);
      for (std::size_t k = 0; k < active.size(); ++k)
        rows.row(static_cast<Eigen::Index>(k)) = a.row(active[k]).normalized();
      const auto rank = matrix_rank(rows, 1e-8);
      return {static_cast<int>(dim_ - rank), rank == 1};
    }
    case BodyKind::vpolytope: {
      // The minimal face holds every vertex that can carry positive weight
      // in a convex combination equal to x.
      const auto& v = as_vpolytope().vertices;
      const auto m = v.cols();
      std::vector<Eigen::Index> in_face;
      for (Eigen::Index j = 0; j < m; ++j) {
        lp::Problem p(m);
        p.objective(j) = -1.0;
        for (Eigen::Index i = 0; i < dim_; ++i) p.add_eq(v.row(i).transpose(), xb(i));
        p.add_eq(Vector::Ones(m), 1.0);
        const auto sol = lp::solve(p);
        if (sol.optimal() && -sol.value > 1e-9) in_face.push_back(j);
      }
      if (in_face.empty()) throw NumericalFailure("face_query: no supporting vertex set");
      Matrix diffs(dim_, static_cast<Eigen::Index>(in_face.size()) - 1);
      for (std::size_t k = 1; k < in_face.size(); ++k)
        diffs.col(static_cast<Eigen::Index>(k) - 1) = v.col(in_face[k]) - v.col(in_face[0]);
      const auto fd = static_cast<int>(matrix_rank(diffs, 1e-8));
      return {fd, fd == dim_ - 1};
    }
  }
  return {};
}

ConvexBody ConvexBody::negated() const {
  switch (kind()) {
    case BodyKind::vpolytope: return ConvexBody(VPolytope{-as_vpolytope().vertices}, dim_);
    case BodyKind::hpolytope: return ConvexBody(HPolytope{-as_hpolytope().normals}, dim_);
    case BodyKind::smooth: return *this;
  }
  return *this;
}

ConvexBody ConvexBody::scaled(double alpha) const {
  require(alpha > 0.0 && std::isfinite(alpha), "scaled: factor must be positive");
  switch (kind()) {
    case BodyKind::vpolytope: return ConvexBody(VPolytope{alpha * as_vpolytope().vertices}, dim_);
    case BodyKind::hpolytope: return ConvexBody(HPolytope{as_hpolytope().normals / alpha}, dim_);
    case BodyKind::smooth: {
      const auto& s = as_smooth();
      return ConvexBody(SmoothBody{s.q / (alpha * alpha), s.q_inv * (alpha * alpha)}, dim_);
    }
  }
  return *this;
}

ConvexBody ConvexBody::linear_image(const Matrix& map) const {
  require(map.rows() == dim_ && map.cols() == dim_, "linear_image: dimension mismatch");
  Eigen::FullPivLU<Matrix> lu(map);
  require(lu.isInvertible() && std::abs(map.determinant()) > 1e-12, "linear_image: map is singular");
  const Matrix inv = lu.inverse();
  switch (kind()) {
    case BodyKind::vpolytope: return ConvexBody(VPolytope{map * as_vpolytope().vertices}, dim_);
    case BodyKind::hpolytope: return ConvexBody(HPolytope{as_hpolytope().normals * inv}, dim_);
    case BodyKind::smooth: {
      const auto& s = as_smooth();
      return quadratic(inv.transpose() * s.q * inv);
    }
  }
  return *this;
}

std::vector<Eigen::Vector2d> convex_hull_2d(std::vector<Eigen::Vector2d> pts) {
  std::sort(pts.begin(), pts.end(), [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) { return (a - b).norm() < 1e-12; }),
            pts.end());
  if (pts.size() < 3) return pts;
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  const double tol = 1e-12 * std::max(1.0, scale * scale);
  auto cross = [](const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
  };
  std::vector<Eigen::Vector2d> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= tol) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= tol) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Eigen::Vector2d> polygon_vertices(const ConvexBody& body) {
  require(body.dim() == 2, "polygon_vertices: body must be planar");
  std::vector<Eigen::Vector2d> pts;
  if (body.is_vpolytope()) {
    const auto& v = body.as_vpolytope().vertices;
    for (Eigen::Index j = 0; j < v.cols(); ++j) pts.emplace_back(v(0, j), v(1, j));
    return convex_hull_2d(std::move(pts));
  }
  require(body.is_hpolytope(), "polygon_vertices: body must be a polytope");
  const auto& a = body.as_hpolytope().normals;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = i + 1; k < a.rows(); ++k) {
      Eigen::Matrix2d m;
      m << a(i, 0), a(i, 1), a(k, 0), a(k, 1);
      if (std::abs(m.determinant()) < 1e-12 * m.cwiseAbs().maxCoeff() * m.cwiseAbs().maxCoeff()) continue;
      const Eigen::Vector2d p = m.partialPivLu().solve(Eigen::Vector2d::Ones());
      if ((a * Vector(p)).maxCoeff() <= 1.0 + 1e-10) pts.push_back(p);
    }
  }
  return convex_hull_2d(std::move(pts));
}

ConvexBody v_to_h_2d(const ConvexBody& body) {
  require(body.dim() == 2, "v_to_h_2d: dimension must be 2");
  require(body.is_vpolytope(), "v_to_h_2d: expected a vertex polytope");
  const auto hull = polygon_vertices(body);
  Matrix a(static_cast<Eigen::Index>(hull.size()), 2);
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const auto& p = hull[k];
    const auto& q = hull[(k + 1) % hull.size()];
    Eigen::Matrix2d m;
    m << p.x(), p.y(), q.x(), q.y();
    a.row(static_cast<Eigen::Index>(k)) = m.partialPivLu().solve(Eigen::Vector2d::Ones()).transpose();
  }
  return ConvexBody::hpolytope(std::move(a));
}

ConvexBody h_to_v_2d(const ConvexBody& body) {
  require(body.dim() == 2, "h_to_v_2d: dimension must be 2");
  require(body.is_hpolytope(), "h_to_v_2d: expected a halfspace polytope");
  const auto hull = polygon_vertices(body);
  std::vector<Vector> verts;
  for (const auto& p : hull) verts.emplace_back(Vector(p));
  return ConvexBody::vpolytope(verts);
}

}  // namespace gaugekit
