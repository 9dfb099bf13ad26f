#include "gaugekit/orthogonality.hpp"

#include "gaugekit/duality.hpp"
#include "gaugekit/lp.hpp"

#include <cmath>

namespace gaugekit {

namespace {

bool passes(double min_value, double gauge_x, double tol) {
  return min_value >= gauge_x - tol * std::max(1.0, gauge_x);
}

}  // namespace

LineMinimum min_gauge_on_line(const Gauge& gauge, const Vector& x, const Vector& y) {
  require(y.size() > 0 && y.cwiseAbs().maxCoeff() > 0.0, "min_gauge_on_line: zero direction");
  return minimize_on_line(gauge, x, y);
}

OrthogonalityReport is_orthogonal(const Gauge& gauge, const Vector& x, const Vector& y, double tol) {
  require_same_dim(x.size(), gauge.dim(), "is_orthogonal");
  require_same_dim(y.size(), gauge.dim(), "is_orthogonal");
  require(x.cwiseAbs().maxCoeff() > 0.0, "is_orthogonal: zero x");
  require(y.cwiseAbs().maxCoeff() > 0.0, "is_orthogonal: zero y");
  const auto m = min_gauge_on_line(gauge, x, y);
  OrthogonalityReport r;
  r.t_star = m.t;
  r.gauge_x = gauge(x);
  r.min_value = std::min(m.value, r.gauge_x);
  r.is_orthogonal = passes(m.value, r.gauge_x, tol);
  r.witness = x / r.gauge_x;
  return r;
}

Matrix hyperplane_from_vectors(const std::vector<Vector>& basis) {
  require(!basis.empty(), "hyperplane: empty basis");
  Matrix h(basis.front().size(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    require_same_dim(basis[k].size(), h.rows(), "hyperplane");
    h.col(static_cast<Eigen::Index>(k)) = basis[k];
  }
  return h;
}

namespace {

void check_hyperplane(const Matrix& h, Eigen::Index dim) {
  require(h.rows() == dim && h.cols() == dim - 1, "hyperplane: expected d-1 vectors in R^d");
  Eigen::JacobiSVD<Matrix> svd(h);
  const auto& sv = svd.singularValues();
  require(sv(sv.size() - 1) > 1e-10 * std::max(1.0, sv(0)), "hyperplane: basis is rank-deficient");
}

Vector hyperplane_normal(const Matrix& h) {
  Eigen::JacobiSVD<Matrix> svd(h.transpose(), Eigen::ComputeFullV);
  return svd.matrixV().col(h.rows() - 1);
}

// min over w of gauge(x + H w).
double min_gauge_on_affine(const Gauge& gauge, const Vector& x, const Matrix& h) {
  const auto& body = gauge.body();
  const auto k = h.cols();
  switch (body.kind()) {
    case BodyKind::hpolytope: {
      const auto& a = body.as_hpolytope().normals;
      lp::Problem p(k + 1);
      for (Eigen::Index j = 0; j <= k; ++j) p.set_free(j);
      p.objective(k) = 1.0;
      const Matrix ah = a * h;
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Vector row(k + 1);
        row.head(k) = ah.row(i).transpose();
        row(k) = -1.0;
        p.add_le(row, -a.row(i).dot(x));
      }
      const auto sol = lp::solve(p);
      if (!sol.optimal()) throw NumericalFailure("hyperplane orthogonality: LP failed");
      return std::max(0.0, sol.x(k));
    }
    case BodyKind::vpolytope: {
      const auto& v = body.as_vpolytope().vertices;
      const auto m = v.cols();
      lp::Problem p(m + k);
      for (Eigen::Index j = 0; j < k; ++j) p.set_free(m + j);
      p.objective.head(m).setOnes();
      for (Eigen::Index i = 0; i < v.rows(); ++i) {
        Vector row(m + k);
        row.head(m) = v.row(i).transpose();
        row.tail(k) = -h.row(i).transpose();
        p.add_eq(row, x(i));
      }
      const auto sol = lp::solve(p);
      if (!sol.optimal()) throw NumericalFailure("hyperplane orthogonality: LP failed");
      return std::max(0.0, sol.value);
    }
    case BodyKind::smooth: {
      const Matrix& q = body.as_smooth().q;
      const Matrix hqh = h.transpose() * q * h;
      const Vector w = -hqh.ldlt().solve(h.transpose() * q * x);
      return gauge(x + h * w);
    }
  }
  return 0.0;
}

}  // namespace

HyperplaneOrthogonality hyperplane_orthogonality(const Gauge& gauge, const Vector& x, const Matrix& hyperplane,
                                                 double tol) {
  require_same_dim(x.size(), gauge.dim(), "is_orthogonal_to_hyperplane");
  check_hyperplane(hyperplane, gauge.dim());
  require(x.cwiseAbs().maxCoeff() > 0.0, "is_orthogonal_to_hyperplane: zero x");
  HyperplaneOrthogonality r;
  r.gauge_x = gauge(x);
  r.min_value = std::min(r.gauge_x, min_gauge_on_affine(gauge, x, hyperplane));
  bool ok = passes(r.min_value, r.gauge_x, tol);
  // The joint minimum already bounds every axis; the axiswise pass is kept as
  // a cross-check of the LP.
  for (Eigen::Index j = 0; ok && j < hyperplane.cols(); ++j)
    ok = is_orthogonal(gauge, x, hyperplane.col(j), tol).is_orthogonal;
  r.is_orthogonal = ok;
  return r;
}

bool is_orthogonal_to_hyperplane(const Gauge& gauge, const Vector& x, const Matrix& hyperplane, double tol) {
  return hyperplane_orthogonality(gauge, x, hyperplane, tol).is_orthogonal;
}

SupportPair support_pair_for_hyperplane(const Gauge& gauge, const Matrix& hyperplane) {
  check_hyperplane(hyperplane, gauge.dim());
  const Vector n = hyperplane_normal(hyperplane);
  return {gauge.body().support(Covector(n)).point, gauge.body().support(Covector(-n)).point};
}

Matrix complement_hyperplane(const SymplecticForm& form, const Vector& x) {
  require(x.cwiseAbs().maxCoeff() > 0.0, "complement_hyperplane: zero vector");
  return symplectic_complement(form, {x});
}

Vector dual_attainment_point(const ConvexBody& body, const SymplecticForm& form, const Vector& x) {
  require_same_dim(x.size(), body.dim(), "dual_attainment_point");
  require(x.cwiseAbs().maxCoeff() > 0.0, "dual_attainment_point: zero x");
  const Covector f = identify_inverse(form, x);
  const auto s = body.support(f);
  const double dual = dual_gauge_eval(body, form, x);
  if (std::abs(form(x, s.point) - dual) > 1e-10 * std::max(1.0, dual))
    throw NumericalFailure("dual_attainment_point: attained value differs from the dual gauge");
  return s.point;
}

}  // namespace gaugekit
