#include "gaugekit/characteristics.hpp"

#include "gaugekit/directions.hpp"
#include "gaugekit/duality.hpp"

#include <cmath>
#include <sstream>

namespace gaugekit {

namespace {

constexpr double kOnBoundaryTol = 1e-8;

// The characteristic field extended off the boundary, homogeneous of degree -1.
Vector characteristic_field(const SmoothBody& s, const SymplecticForm& form, const Vector& x) {
  const Vector grad = s.gradient(x);
  const double denom = grad.dot(x);
  if (!(denom > 0.0)) throw NumericalFailure("characteristic field: grad g(x) . x <= 0");
  return form.inverse_transpose() * grad / denom;
}

Vector rk4_step(const SmoothBody& s, const SymplecticForm& form, const Vector& c, double h) {
  const Vector k1 = characteristic_field(s, form, c);
  const Vector k2 = characteristic_field(s, form, c + 0.5 * h * k1);
  const Vector k3 = characteristic_field(s, form, c + 0.5 * h * k2);
  const Vector k4 = characteristic_field(s, form, c + h * k3);
  return c + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Vector to_boundary(const SmoothBody& s, const Vector& x) { return x / std::sqrt(s.level(x)); }

double open_area(const SymplecticForm& form, const SampledCurve& c) {
  const auto d = curve_derivatives(c);
  std::vector<double> v(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) v[i] = 0.5 * form(d[i], c.points[i]);
  return trapezoid(c.times, v);
}

double dual_length_of(const ConvexBody& body, const SymplecticForm& form, const SampledCurve& c) {
  const auto d = curve_derivatives(c);
  std::vector<double> v(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) v[i] = dual_gauge_eval(body, form, d[i]);
  return trapezoid(c.times, v);
}

}  // namespace

Vector j_map(const ConvexBody& body, const SymplecticForm& form, const Vector& x) {
  require_same_dim(body.dim(), form.dim(), "j_map");
  require_same_dim(x.size(), body.dim(), "j_map");
  const auto& s = body.as_smooth();
  require(std::abs(s.level(x) - 1.0) <= kOnBoundaryTol, "j_map: point is not on the boundary");
  return characteristic_field(s, form, x);
}

FlowResult integrate_characteristic(const ConvexBody& body, const SymplecticForm& form, const Vector& start,
                                    const FlowOptions& opt) {
  require(opt.step > 0.0 && opt.max_time > 0.0, "integrate_characteristic: step and max_time must be positive");
  require_same_dim(form.dim(), body.dim(), "integrate_characteristic");
  const auto& s = body.as_smooth();
  const Vector x0 = start;
  const Vector n0 = j_map(body, form, x0).normalized();
  auto section = [&](const Vector& c) { return n0.dot(c - x0); };

  FlowResult result;
  SampledCurve& curve = result.curve;
  curve.tangents.emplace();
  auto record = [&](double t, const Vector& c) {
    curve.times.push_back(t);
    curve.points.push_back(c);
    curve.tangents->push_back(characteristic_field(s, form, c));
  };
  auto advance = [&](const Vector& c, double h) {
    const Vector raw = rk4_step(s, form, c, h);
    const double drift = std::abs(s.level(raw) - 1.0);
    result.max_constraint_drift = std::max(result.max_constraint_drift, drift);
    if (drift > opt.drift_limit) {
      std::ostringstream msg;
      msg << "integrate_characteristic: constraint drift " << drift << " exceeds " << opt.drift_limit
          << "; reduce the step size";
      throw NumericalFailure(msg.str());
    }
    return to_boundary(s, raw);
  };

  double t = 0.0;
  Vector c = x0;
  record(t, c);
  const double min_time = 10.0 * opt.step;
  while (t < opt.max_time) {
    const double h = std::min(opt.step, opt.max_time - t);
    const Vector next = advance(c, h);
    const double s0 = section(c);
    const double s1 = section(next);
    if (t + h >= min_time && s0 < 0.0 && s1 >= 0.0) {
      // Regula falsi (Illinois) on the partial step length.
      double lo = 0.0, hi = h, flo = s0, fhi = s1;
      Vector hit = next;
      double tau = h;
      for (int it = 0; it < 100 && std::abs(hi - lo) > 1e-16 * std::max(1.0, t); ++it) {
        tau = (fhi - flo) != 0.0 ? hi - fhi * (hi - lo) / (fhi - flo) : 0.5 * (lo + hi);
        if (!(tau > lo && tau < hi)) tau = 0.5 * (lo + hi);
        hit = advance(c, tau);
        const double f = section(hit);
        if (f == 0.0) break;
        if ((f < 0.0) == (flo < 0.0)) {
          lo = tau;
          flo = f;
          fhi *= 0.5;
        } else {
          hi = tau;
          fhi = f;
          flo *= 0.5;
        }
      }
      const Vector tangent = characteristic_field(s, form, hit).normalized();
      if ((hit - x0).norm() <= opt.closure_tol && tangent.dot(n0) > opt.tangent_alignment) {
        record(t + tau, hit);
        result.closed = true;
        result.period = t + tau;
        curve.closed = true;
        break;
      }
    }
    t += h;
    c = next;
    record(t, c);
  }

  result.end_time = curve.times.back();
  if (curve.size() >= 3) {
    result.area = open_area(form, curve);
    result.dual_length = dual_length_of(body, form, curve);
  }
  return result;
}

double symplectic_area(const SymplecticForm& form, const SampledCurve& curve) {
  require(curve.closed, "symplectic_area: curve is not closed");
  curve.validate();
  const auto d = curve_derivatives(curve);
  std::vector<double> v(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    v[i] = form(d[i], curve.points[i]);
    require(v[i] > 0.0, "symplectic_area: curve is not positively parametrized");
  }
  return 0.5 * trapezoid(curve.times, v);
}

IsoperimetricReport isoperimetric_report(const ConvexBody& body, const SymplecticForm& form, const SampledCurve& curve,
                                         double iso_tol) {
  require_same_dim(body.dim(), form.dim(), "isoperimetric_report");
  for (const auto& p : curve.points)
    require(std::abs(body.gauge(p) - 1.0) <= 1e-6, "isoperimetric_report: curve is not on the boundary");
  IsoperimetricReport r;
  r.area = symplectic_area(form, curve);
  r.dual_length = dual_length_of(body, form, curve);
  r.ratio = 2.0 * r.area / r.dual_length;
  r.inequality_holds = r.ratio <= 1.0 + 1e-6;
  r.is_characteristic = std::abs(r.ratio - 1.0) <= iso_tol;
  return r;
}

double jj_involution_check(const ConvexBody& body, const SymplecticForm& form, const Vector& x) {
  const Vector jx = j_map(body, form, x);
  const ConvexBody dual = dual_body(body, form);
  require(dual.is_smooth(), "jj_involution_check: dual body is not smooth");
  return (j_map(dual, form, jx) + x).norm();
}

ConvexBody section_body(const ConvexBody& body, const PlaneSubspace& plane) {
  require_same_dim(plane.dim(), body.dim(), "section_body");
  const Matrix b = plane.basis();
  switch (body.kind()) {
    case BodyKind::hpolytope: {
      const Matrix ab = body.as_hpolytope().normals * b;
      std::vector<Eigen::Index> keep;
      for (Eigen::Index i = 0; i < ab.rows(); ++i)
        if (ab.row(i).norm() > 1e-14) keep.push_back(i);
      Matrix rows(static_cast<Eigen::Index>(keep.size()), 2);
      for (std::size_t k = 0; k < keep.size(); ++k) rows.row(static_cast<Eigen::Index>(k)) = ab.row(keep[k]);
      return ConvexBody::hpolytope(std::move(rows));
    }
    case BodyKind::smooth: return ConvexBody::quadratic(b.transpose() * body.as_smooth().q * b);
    case BodyKind::vpolytope: {
      require(body.dim() == 2, "section_body: vertex polytopes are supported in dimension 2 only");
      return body.linear_image(b.inverse());
    }
  }
  throw InvalidInput("section_body: unknown body kind");
}

ConvexBody projected_dual_body(const ConvexBody& body, const SymplecticForm& form, const PlaneSubspace& plane) {
  require(is_symplectic_plane(form, plane), "projected_dual_body: plane is not symplectic");
  const double c = form(plane.u(), plane.v());
  // (s, t) = (w(x, v), -w(x, u)) / c
  Matrix p(2, form.dim());
  p.row(0) = (form.matrix() * plane.v()).transpose() / c;
  p.row(1) = -(form.matrix() * plane.u()).transpose() / c;
  const ConvexBody dual = dual_body(body, form);
  switch (dual.kind()) {
    case BodyKind::vpolytope: {
      const Matrix img = p * dual.as_vpolytope().vertices;
      std::vector<Eigen::Vector2d> pts;
      for (Eigen::Index j = 0; j < img.cols(); ++j) pts.emplace_back(img(0, j), img(1, j));
      std::vector<Vector> hull;
      for (const auto& q : convex_hull_2d(std::move(pts))) hull.emplace_back(Vector(q));
      return ConvexBody::vpolytope(hull);
    }
    case BodyKind::smooth: {
      const Matrix shape = p * dual.as_smooth().q_inv * p.transpose();
      return ConvexBody::quadratic(shape.inverse());
    }
    case BodyKind::hpolytope: {
      require(form.dim() == 2, "projected_dual_body: vertex polytopes are supported in dimension 2 only");
      return dual.linear_image(p);
    }
  }
  throw InvalidInput("projected_dual_body: unknown body kind");
}

SectionDuality section_duality_check(const ConvexBody& body, const SymplecticForm& form, const PlaneSubspace& plane) {
  require(is_symplectic_plane(form, plane), "section_duality_check: plane is not symplectic");
  ConvexBody lhs = dual_body(section_body(body, plane), restrict_form(form, plane));
  ConvexBody rhs = projected_dual_body(body, form, plane);
  const double gap = support_distance(lhs, rhs, direction_set(2, 512));
  return {std::move(lhs), std::move(rhs), gap};
}

PlanarCharacteristic planar_characteristic_check(const ConvexBody& body, const SymplecticForm& form,
                                                 const PlaneSubspace& plane, const FlowOptions& options) {
  require(is_symplectic_plane(form, plane), "planar_characteristic_check: plane is not symplectic");
  require(body.is_smooth(), "planar_characteristic_check: body must be smooth");
  const ConvexBody lhs = dual_body(section_body(body, plane), restrict_form(form, plane));
  const ConvexBody rhs = section_body(dual_body(body, form), plane);

  PlanarCharacteristic r;
  r.support_gap = support_distance(lhs, rhs, direction_set(2, 512));
  r.is_characteristic = r.support_gap <= 1e-8;

  const auto flow = integrate_characteristic(body, form, body.boundary_ray_intersection(plane.u()), options);
  for (const auto& p : flow.curve.points)
    r.out_of_plane_drift = std::max(r.out_of_plane_drift, (p - project_onto_plane(form, plane, p)).norm());
  r.flow_stays_in_plane = r.out_of_plane_drift <= 1e-6;
  r.flow_agrees = r.flow_stays_in_plane == r.is_characteristic;
  return r;
}

CapacityEstimate capacity_estimate(const ConvexBody& body, const SymplecticForm& form, const std::vector<Vector>& starts,
                                   const FlowOptions& options, double iso_tol) {
  const auto& s = body.as_smooth();
  const auto d = body.dim();
  std::vector<Vector> seeds;
  auto add_seed = [&](const Vector& dir) {
    const Vector p = body.boundary_ray_intersection(dir);
    for (const auto& q : seeds)
      if ((q - p).norm() < 1e-9) return;
    seeds.push_back(p);
  };
  for (const auto& p : starts) {
    require_same_dim(p.size(), d, "capacity_estimate");
    add_seed(p);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s.q);
  for (Eigen::Index i = 0; i < d; ++i) {
    add_seed(Vector::Unit(d, i));
    add_seed(-Vector::Unit(d, i));
    add_seed(eig.eigenvectors().col(i));
    add_seed(-eig.eigenvectors().col(i));
  }

  CapacityEstimate est;
  double min_area = std::numeric_limits<double>::infinity();
  double min_half = std::numeric_limits<double>::infinity();
  for (const auto& seed : seeds) {
    ++est.flow_count;
    const auto flow = integrate_characteristic(body, form, seed, options);
    if (!flow.closed) {
      std::ostringstream msg;
      msg << "flow from seed " << est.flow_count - 1 << " did not close within t = " << options.max_time;
      est.diagnostics.push_back(msg.str());
      continue;
    }
    ++est.closed_count;
    est.areas.push_back(flow.area);
    min_area = std::min(min_area, flow.area);
    min_half = std::min(min_half, 0.5 * flow.dual_length);
  }
  est.heuristic = est.closed_count < est.flow_count;
  if (est.closed_count == 0) {
    est.diagnostics.push_back("no closed characteristic found");
    return est;
  }
  est.capacity = min_area;
  est.min_half_dual_length = min_half;
  est.lengths_agree = std::abs(min_area - min_half) <= iso_tol * min_area;
  return est;
}

}  // namespace gaugekit
