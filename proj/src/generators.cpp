#include "gaugekit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gaugekit {

ConvexBody triangle_fixture() {
  const double r3 = std::sqrt(3.0);
  Matrix v(2, 3);
  v << 0.0, r3, -r3,
       2.0, -1.0, -1.0;
  return ConvexBody::vpolytope(std::move(v));
}

ConvexBody square_fixture() {
  Matrix v(2, 4);
  v << 1.0, -1.0, -1.0, 1.0,
       1.0, 1.0, -1.0, -1.0;
  return ConvexBody::vpolytope(std::move(v));
}

ConvexBody random_polygon(CounterRng& rng, int min_vertices, int max_vertices) {
  for (;;) {
    const int m = min_vertices + static_cast<int>(rng.uniform() * (max_vertices - min_vertices + 1));
    std::vector<double> angles;
    for (int k = 0; k < m; ++k) angles.push_back(rng.uniform(0.0, 2.0 * std::numbers::pi));
    std::sort(angles.begin(), angles.end());
    double max_gap = angles.front() + 2.0 * std::numbers::pi - angles.back();
    for (int k = 1; k < m; ++k) max_gap = std::max(max_gap, angles[k] - angles[k - 1]);
    if (max_gap > 0.9 * std::numbers::pi) continue;
    std::vector<Eigen::Vector2d> pts;
    for (double a : angles) {
      const double r = rng.uniform(0.5, 2.0);
      pts.emplace_back(r * std::cos(a), r * std::sin(a));
    }
    const auto hull = convex_hull_2d(pts);
    if (hull.size() < 3) continue;
    std::vector<Vector> verts;
    for (const auto& p : hull) verts.emplace_back(Vector(p));
    try {
      return ConvexBody::vpolytope(verts);
    } catch (const InvalidInput&) {
      continue;
    }
  }
}

ConvexBody random_hpolytope(CounterRng& rng, int dim, int min_facets, int max_facets) {
  for (;;) {
    const int m = min_facets + static_cast<int>(rng.uniform() * (max_facets - min_facets + 1));
    Matrix a(m, dim);
    for (int i = 0; i < m; ++i) a.row(i) = rng.unit_vector(dim).transpose() / rng.uniform(0.5, 1.5);
    try {
      return ConvexBody::hpolytope(std::move(a));
    } catch (const InvalidInput&) {
      continue;
    }
  }
}

SymplecticForm random_form(CounterRng& rng, int dim) {
  const SymplecticForm base = SymplecticForm::standard(dim / 2);
  for (;;) {
    Matrix s = Matrix::Identity(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) s(i, j) += 0.5 * rng.normal();
    Eigen::JacobiSVD<Matrix> svd(s);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) < 0.2) continue;
    Matrix w = s.transpose() * base.matrix() * s;
    return SymplecticForm(0.5 * (w - w.transpose()));
  }
}

PlaneSubspace random_symplectic_plane(CounterRng& rng, const SymplecticForm& form) {
  for (;;) {
    const Vector u = rng.unit_vector(form.dim());
    const Vector v = rng.unit_vector(form.dim());
    if (std::abs(form(u, v)) >= 0.2) return PlaneSubspace(u, v);
  }
}

Vector random_point(CounterRng& rng, Eigen::Index dim, double r) {
  Vector p(dim);
  for (Eigen::Index i = 0; i < dim; ++i) p(i) = rng.uniform(-r, r);
  return p;
}

}  // namespace gaugekit

namespace gaugekit {

SampledCurve boundary_loop(const ConvexBody& body, const SymplecticForm& form, const Vector& a, const Vector& b,
                           const std::vector<Vector>& cos_terms, const std::vector<Vector>& sin_terms,
                           std::size_t samples) {
  const Matrix& q = body.as_smooth().q;
  require(cos_terms.size() == sin_terms.size(), "boundary_loop: harmonic lists differ in length");
  auto dir = [&](double s) {
    Vector d = std::cos(s) * a + std::sin(s) * b;
    for (std::size_t k = 0; k < cos_terms.size(); ++k) {
      const double f = static_cast<double>(k + 1);
      d += std::cos(f * s) * cos_terms[k] + std::sin(f * s) * sin_terms[k];
    }
    return d;
  };
  auto ddir = [&](double s) {
    Vector d = -std::sin(s) * a + std::cos(s) * b;
    for (std::size_t k = 0; k < cos_terms.size(); ++k) {
      const double f = static_cast<double>(k + 1);
      d += -f * std::sin(f * s) * cos_terms[k] + f * std::cos(f * s) * sin_terms[k];
    }
    return d;
  };
  auto point = [&](double s) {
    const Vector d = dir(s);
    return Vector(d / std::sqrt(d.dot(q * d)));
  };
  auto tangent = [&](double s) {
    const Vector d = dir(s);
    const Vector dd = ddir(s);
    const double g = std::sqrt(d.dot(q * d));
    return Vector(dd / g - d * (d.dot(q * dd)) / (g * g * g));
  };
  const double sign = form(tangent(0.0), point(0.0)) >= 0.0 ? 1.0 : -1.0;
  return sample_closed_curve([&](double s) { return point(sign * s); }, 2.0 * std::numbers::pi, samples,
                             [&](double s) { return Vector(sign * tangent(sign * s)); });
}

SampledCurve random_boundary_loop(CounterRng& rng, const ConvexBody& body, const SymplecticForm& form,
                                  std::size_t samples) {
  const auto d = body.dim();
  for (;;) {
    std::vector<Vector> cos_terms, sin_terms;
    const int harmonics = 1 + static_cast<int>(rng.uniform() * 3.0);
    for (int k = 0; k < harmonics; ++k) {
      cos_terms.push_back(rng.uniform(0.15, 0.35) * rng.unit_vector(d));
      sin_terms.push_back(rng.uniform(0.15, 0.35) * rng.unit_vector(d));
    }
    auto loop = boundary_loop(body, form, Vector::Unit(d, 0), Vector::Unit(d, 1), cos_terms, sin_terms, samples);
    bool positive = true;
    for (std::size_t i = 0; i < loop.size() && positive; ++i)
      positive = loop.points[i].allFinite() && form((*loop.tangents)[i], loop.points[i]) > 1e-3;
    if (positive) return loop;
  }
}

}  // namespace gaugekit
