#include "gaugekit/gauge.hpp"

#include "gaugekit/lp.hpp"

#include <cmath>

namespace gaugekit {

Line::Line(Vector point, Vector direction) : point_(std::move(point)), direction_(std::move(direction)) {
  require_same_dim(point_.size(), direction_.size(), "line");
  require(direction_.cwiseAbs().maxCoeff() > 0.0, "line: zero direction");
}

double gauge_eval(const Gauge& gauge, const Vector& x) { return gauge(x); }

double distance(const Gauge& gauge, const Vector& x, const Vector& y) {
  require_same_dim(x.size(), y.size(), "distance");
  return gauge(y - x);
}

LineMinimum minimize_convex_1d(const std::function<double(double)>& f, double scale, double tol) {
  // Bracket [a, c] around a point b with f(b) <= f(a), f(c).
  double a = -scale, b = 0.0, c = scale;
  double fa = f(a), fb = f(b), fc = f(c);
  for (int i = 0; i < 200 && !(fb <= fa && fb <= fc); ++i) {
    if (fa < fb) {
      c = b;
      fc = fb;
      b = a;
      fb = fa;
      a = b - 2.0 * (c - b);
      fa = f(a);
    } else {
      a = b;
      fa = fb;
      b = c;
      fb = fc;
      c = b + 2.0 * (b - a);
      fc = f(c);
    }
  }
  if (!(fb <= fa && fb <= fc)) throw NumericalFailure("minimize_convex_1d: could not bracket a minimum");

  constexpr double kInvPhi = 0.6180339887498949;
  double lo = a, hi = c;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }
  LineMinimum best{0.5 * (lo + hi), f(0.5 * (lo + hi))};
  for (auto [t, v] : {std::pair{x1, f1}, std::pair{x2, f2}, std::pair{b, fb}})
    if (v < best.value) best = {t, v};
  return best;
}

LineMinimum minimize_on_line(const Gauge& gauge, const Vector& base, const Vector& dir) {
  const auto& body = gauge.body();
  require_same_dim(base.size(), body.dim(), "minimize_on_line");
  require_same_dim(dir.size(), body.dim(), "minimize_on_line");
  require(dir.cwiseAbs().maxCoeff() > 0.0, "minimize_on_line: zero direction");

  switch (body.kind()) {
    case BodyKind::hpolytope: {
      // min s  s.t.  a_i . base + t (a_i . dir) <= s; variables (t, s) free.
      const auto& a = body.as_hpolytope().normals;
      lp::Problem p(2);
      p.set_free(0);
      p.set_free(1);
      p.objective(1) = 1.0;
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Vector row(2);
        row << a.row(i).dot(dir), -1.0;
        p.add_le(row, -a.row(i).dot(base));
      }
      const auto sol = lp::solve(p);
      if (!sol.optimal()) throw NumericalFailure("minimize_on_line: LP failed");
      return {sol.x(0), std::max(0.0, sol.x(1))};
    }
    case BodyKind::vpolytope: {
      // min sum c  s.t.  V c - t dir = base, c >= 0, t free.
      const auto& v = body.as_vpolytope().vertices;
      const auto m = v.cols();
      lp::Problem p(m + 1);
      p.set_free(m);
      p.objective.head(m).setOnes();
      for (Eigen::Index i = 0; i < v.rows(); ++i) {
        Vector row(m + 1);
        row.head(m) = v.row(i).transpose();
        row(m) = -dir(i);
        p.add_eq(row, base(i));
      }
      const auto sol = lp::solve(p);
      if (!sol.optimal()) throw NumericalFailure("minimize_on_line: LP failed");
      return {sol.x(m), std::max(0.0, sol.value)};
    }
    case BodyKind::smooth: {
      const double scale = std::max(1.0, base.norm() / dir.norm());
      return minimize_convex_1d([&](double t) { return gauge(base + t * dir); }, scale);
    }
  }
  return {};
}

PointLineDistance point_line_distance(const Gauge& gauge, const Vector& p, const Line& line) {
  require_same_dim(p.size(), line.point().size(), "point_line_distance");
  const auto m = minimize_on_line(gauge, line.point() - p, line.direction());
  return {m.value, line.at(m.t), m.t};
}

double symmetrized_norm(const Gauge& gauge, const Vector& x) { return gauge(x) + gauge(-x); }

double opposite_gauge_eval(const Gauge& gauge, const Vector& x) { return gauge(-x); }

double curve_length(const Gauge& gauge, const SampledCurve& curve) {
  require(curve.size() >= 3, "curve_length: at least 3 samples are required");
  const auto d = curve_derivatives(curve);
  std::vector<double> values(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) values[i] = gauge(d[i]);
  return trapezoid(curve.times, values);
}

}  // namespace gaugekit
