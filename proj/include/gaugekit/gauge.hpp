#pragma once

// Gauge (asymmetric norm) evaluation and the metric quantities derived from it.

#include "gaugekit/bodies.hpp"
#include "gaugekit/curve.hpp"

namespace gaugekit {

class Gauge {
 public:
  explicit Gauge(ConvexBody unit_ball) : body_(std::move(unit_ball)) {}
  const ConvexBody& body() const { return body_; }
  Eigen::Index dim() const { return body_.dim(); }
  double operator()(const Vector& x) const { return body_.gauge(x); }

 private:
  ConvexBody body_;
};

class Line {
 public:
  Line(Vector point, Vector direction);
  const Vector& point() const { return point_; }
  const Vector& direction() const { return direction_; }
  Vector at(double t) const { return point_ + t * direction_; }

 private:
  Vector point_;
  Vector direction_;
};

struct LineMinimum {
  double t = 0.0;
  double value = 0.0;
};

struct PointLineDistance {
  double dist = 0.0;
  Vector foot;
  double t = 0.0;
};

double gauge_eval(const Gauge& gauge, const Vector& x);
// d(x, y) = gauge(y - x); not symmetric in general.
double distance(const Gauge& gauge, const Vector& x, const Vector& y);
// min_t gauge(base + t*dir): an LP for polytopes, golden section for smooth bodies.
LineMinimum minimize_on_line(const Gauge& gauge, const Vector& base, const Vector& dir);
PointLineDistance point_line_distance(const Gauge& gauge, const Vector& p, const Line& line);
// gauge(x) + gauge(-x)
double symmetrized_norm(const Gauge& gauge, const Vector& x);
// Gauge of -K at x, i.e. gauge(-x).
double opposite_gauge_eval(const Gauge& gauge, const Vector& x);
// Integral of gauge(c'(t)) over the sample grid.
double curve_length(const Gauge& gauge, const SampledCurve& curve);

// Golden-section minimization of a convex function on the real line; the
// bracket is found by doubling from [-1, 1] * scale.
LineMinimum minimize_convex_1d(const std::function<double(double)>& f, double scale = 1.0, double tol = 1e-10);

}  // namespace gaugekit
