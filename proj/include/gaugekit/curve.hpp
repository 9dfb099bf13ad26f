#pragma once

#include "gaugekit/common.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace gaugekit {

// Time-stamped samples c(t_i). A closed curve repeats its first point (within
// the closure tolerance) as its last sample, at time t_0 + period.
struct SampledCurve {
  std::vector<double> times;
  std::vector<Vector> points;
  std::optional<std::vector<Vector>> tangents;
  bool closed = false;

  std::size_t size() const { return points.size(); }
  void validate(double closure_tol = 1e-6) const;

  SampledCurve reversed() const;
  SampledCurve scaled(double alpha) const;
};

// c'(t_i): the carried tangents, or five-point Lagrange differences on the
// sample grid (periodic wrap for closed curves).
std::vector<Vector> curve_derivatives(const SampledCurve& c);

// Composite trapezoid of integrand(t_i) over the sample times.
double trapezoid(const std::vector<double>& times, const std::vector<double>& values);

// Uniform samples of a closed parametrized curve over [0, period], endpoint included.
SampledCurve sample_closed_curve(const std::function<Vector(double)>& point, double period,
                                 std::size_t samples,
                                 const std::function<Vector(double)>& tangent = nullptr);

}  // namespace gaugekit
