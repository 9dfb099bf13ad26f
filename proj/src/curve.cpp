#include "gaugekit/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gaugekit {

void SampledCurve::validate(double closure_tol) const {
  require(times.size() == points.size(), "curve: times and points differ in length");
  if (tangents) require(tangents->size() == points.size(), "curve: tangents and points differ in length");
  for (std::size_t i = 1; i < times.size(); ++i)
    require(times[i] > times[i - 1], "curve: times must be strictly increasing");
  for (std::size_t i = 1; i < points.size(); ++i)
    require_same_dim(points[i].size(), points[0].size(), "curve");
  if (closed && !points.empty())
    require((points.back() - points.front()).norm() <= closure_tol, "curve: closed curve does not return to its start");
}

SampledCurve SampledCurve::reversed() const {
  SampledCurve r;
  r.closed = closed;
  const double t_end = times.empty() ? 0.0 : times.back();
  const double t_start = times.empty() ? 0.0 : times.front();
  for (std::size_t i = size(); i-- > 0;) {
    r.times.push_back(t_start + (t_end - times[i]));
    r.points.push_back(points[i]);
  }
  if (tangents) {
    r.tangents.emplace();
    for (std::size_t i = size(); i-- > 0;) r.tangents->push_back(-(*tangents)[i]);
  }
  return r;
}

SampledCurve SampledCurve::scaled(double alpha) const {
  SampledCurve r = *this;
  for (auto& p : r.points) p *= alpha;
  if (r.tangents)
    for (auto& v : *r.tangents) v *= alpha;
  return r;
}

namespace {

// d/dt at nodes[at] of the Lagrange interpolant through (nodes, values).
Vector lagrange_derivative(const std::vector<double>& nodes, const std::vector<const Vector*>& values,
                           std::size_t at) {
  const std::size_t n = nodes.size();
  Vector result = Vector::Zero(values.front()->size());
  const double x = nodes[at];
  for (std::size_t j = 0; j < n; ++j) {
    double w = 0.0;
    if (j == at) {
      for (std::size_t m = 0; m < n; ++m)
        if (m != j) w += 1.0 / (x - nodes[m]);
    } else {
      // l_j'(x_at) = prod_{m != j, at} (x_at - x_m) / prod_{m != j} (x_j - x_m)
      double num = 1.0, den = 1.0;
      for (std::size_t m = 0; m < n; ++m) {
        if (m == j) continue;
        den *= nodes[j] - nodes[m];
        if (m != at) num *= x - nodes[m];
      }
      w = num / den;
    }
    result += w * *values[j];
  }
  return result;
}

}  // namespace

std::vector<Vector> curve_derivatives(const SampledCurve& c) {
  c.validate(std::numeric_limits<double>::infinity());
  require(c.size() >= 3, "curve: at least 3 samples are required");
  if (c.tangents) return *c.tangents;

  const std::size_t n = c.size();
  std::vector<Vector> out(n);
  if (c.closed) {
    // Unique samples 0..n-2; sample n-1 duplicates sample 0.
    const std::size_t period_n = n - 1;
    const double period = c.times.back() - c.times.front();
    const auto half = static_cast<std::ptrdiff_t>(std::min<std::size_t>(2, (period_n - 1) / 2));
    for (std::size_t i = 0; i < period_n; ++i) {
      std::vector<double> nodes;
      std::vector<const Vector*> values;
      for (std::ptrdiff_t k = -half; k <= half; ++k) {
        const std::ptrdiff_t raw = static_cast<std::ptrdiff_t>(i) + k;
        const std::ptrdiff_t wrapped = ((raw % static_cast<std::ptrdiff_t>(period_n)) + static_cast<std::ptrdiff_t>(period_n)) %
                                       static_cast<std::ptrdiff_t>(period_n);
        const double shift = std::floor(static_cast<double>(raw) / static_cast<double>(period_n)) * period;
        nodes.push_back(c.times[static_cast<std::size_t>(wrapped)] + shift);
        values.push_back(&c.points[static_cast<std::size_t>(wrapped)]);
      }
      out[i] = lagrange_derivative(nodes, values, static_cast<std::size_t>(half));
    }
    out[n - 1] = out[0];
    return out;
  }
  const std::size_t width = std::min<std::size_t>(5, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t start = i >= width / 2 ? i - width / 2 : 0;
    start = std::min(start, n - width);
    std::vector<double> nodes(c.times.begin() + static_cast<std::ptrdiff_t>(start),
                              c.times.begin() + static_cast<std::ptrdiff_t>(start + width));
    std::vector<const Vector*> values;
    for (std::size_t k = start; k < start + width; ++k) values.push_back(&c.points[k]);
    out[i] = lagrange_derivative(nodes, values, i - start);
  }
  return out;
}

double trapezoid(const std::vector<double>& times, const std::vector<double>& values) {
  require(times.size() == values.size(), "trapezoid: size mismatch");
  double sum = 0.0;
  for (std::size_t i = 1; i < times.size(); ++i) sum += 0.5 * (values[i] + values[i - 1]) * (times[i] - times[i - 1]);
  return sum;
}

SampledCurve sample_closed_curve(const std::function<Vector(double)>& point, double period, std::size_t samples,
                                 const std::function<Vector(double)>& tangent) {
  require(samples >= 3 && period > 0.0, "sample_closed_curve: invalid arguments");
  SampledCurve c;
  c.closed = true;
  if (tangent) c.tangents.emplace();
  for (std::size_t i = 0; i <= samples; ++i) {
    const double t = period * static_cast<double>(i) / static_cast<double>(samples);
    // The last sample repeats the first exactly.
    const double tt = i == samples ? 0.0 : t;
    c.times.push_back(t);
    c.points.push_back(point(tt));
    if (tangent) c.tangents->push_back(tangent(tt));
  }
  return c;
}

}  // namespace gaugekit
