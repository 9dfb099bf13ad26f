#include "gaugekit/duality.hpp"

#include "gaugekit/directions.hpp"

#include <cmath>

namespace gaugekit {

ConvexBody polar_body(const ConvexBody& body) {
  switch (body.kind()) {
    case BodyKind::vpolytope: return ConvexBody::hpolytope(Matrix(body.as_vpolytope().vertices.transpose()));
    case BodyKind::hpolytope: return ConvexBody::vpolytope(Matrix(body.as_hpolytope().normals.transpose()));
    case BodyKind::smooth: return ConvexBody::quadratic(body.as_smooth().q_inv);
  }
  throw InvalidInput("polar_body: unknown body kind");
}

double polar_gauge_eval(const ConvexBody& body, const Covector& f) {
  require_same_dim(f.dim(), body.dim(), "polar_gauge_eval");
  return body.support_value(f.coords);
}

ConvexBody dual_body(const ConvexBody& body, const SymplecticForm& form) {
  require_same_dim(body.dim(), form.dim(), "dual_body");
  const Matrix& w = form.matrix();
  switch (body.kind()) {
    case BodyKind::vpolytope: {
      // w(x, v_j) <= 1  <=>  (W v_j) . x <= 1
      return ConvexBody::hpolytope(Matrix((w * body.as_vpolytope().vertices).transpose()));
    }
    case BodyKind::hpolytope: {
      return ConvexBody::vpolytope(Matrix(form.inverse_transpose() * body.as_hpolytope().normals.transpose()));
    }
    case BodyKind::smooth: {
      // h_K(W^T x) <= 1  <=>  x^T W Q^{-1} W^T x <= 1
      return ConvexBody::quadratic(w * body.as_smooth().q_inv * w.transpose());
    }
  }
  throw InvalidInput("dual_body: unknown body kind");
}

double dual_gauge_eval(const ConvexBody& body, const SymplecticForm& form, const Vector& x) {
  require_same_dim(x.size(), body.dim(), "dual_gauge_eval");
  require_same_dim(form.dim(), body.dim(), "dual_gauge_eval");
  return body.support_value(form.matrix().transpose() * x);
}

ConvexBody bidual_body(const ConvexBody& body, const SymplecticForm& form) {
  return dual_body(dual_body(body, form), form);
}

DualBodyResult dual_body_with_provenance(const ConvexBody& body, const SymplecticForm& form, std::string source_id,
                                         std::string form_id) {
  return {dual_body(body, form), std::move(source_id), std::move(form_id)};
}

std::optional<double> homothety_detect(const ConvexBody& a, const ConvexBody& b, double tol) {
  if (a.dim() != b.dim()) return std::nullopt;
  const auto dirs = default_direction_set(a.dim());
  const double ha0 = a.support_value(dirs.front());
  const double alpha = b.support_value(dirs.front()) / ha0;
  if (!(alpha > 0.0) || !std::isfinite(alpha)) return std::nullopt;
  for (const auto& u : dirs)
    if (std::abs(b.support_value(u) - alpha * a.support_value(u)) > tol) return std::nullopt;
  return alpha;
}

}  // namespace gaugekit
