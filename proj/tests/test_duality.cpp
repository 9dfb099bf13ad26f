#include "doctest.h"
#include "oracles.hpp"

#include "gaugekit/directions.hpp"
#include "gaugekit/duality.hpp"
#include "gaugekit/generators.hpp"

using namespace gaugekit;
using oracle::kSqrt3;

namespace {

Vector v2(double a, double b) { return Eigen::Vector2d(a, b); }
const double h = std::sqrt(3.0) / 2.0;

// max over vertices of w(x, v)
double brute_dual_gauge(const SymplecticForm& w, const Matrix& verts, const Vector& x) {
  double best = -1e300;
  for (Eigen::Index j = 0; j < verts.cols(); ++j) best = std::max(best, w(x, verts.col(j)));
  return best;
}

}  // namespace

TEST_CASE("polar of the triangle has the edge midpoints as vertices") {
  const auto k = triangle_fixture();
  const auto polar = polar_body(k);
  // midpoints of the edges of K
  std::vector<Eigen::Vector2d> mids;
  const auto verts = polygon_vertices(k);
  for (std::size_t i = 0; i < 3; ++i) mids.push_back(0.5 * (verts[i] + verts[(i + 1) % 3]));
  CHECK(oracle::vertex_set_error(polygon_vertices(polar), mids) <= 1e-12);
  CHECK(oracle::vertex_set_error(polygon_vertices(polar), {{0, -1}, {h, 0.5}, {-h, 0.5}}) <= 1e-12);
}

TEST_CASE("polar bodies") {
  const auto cross = polar_body(square_fixture());
  CHECK(oracle::vertex_set_error(polygon_vertices(cross), {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) < 1e-12);
  CHECK(support_distance(polar_body(ConvexBody::euclidean_ball(4)), ConvexBody::euclidean_ball(4)) < 1e-12);
  const auto e = ConvexBody::ellipsoid({1.0, 2.0});
  CHECK(support_distance(polar_body(e), ConvexBody::ellipsoid({1.0, 0.5})) < 1e-12);

  const auto k = triangle_fixture();
  CHECK(polar_gauge_eval(k, Covector(v2(1, 0))) == doctest::Approx(kSqrt3));
  CHECK(polar_gauge_eval(k, Covector(v2(0, 1))) == doctest::Approx(2.0));
  const auto polar = polar_body(k);
  CounterRng rng(41);
  for (int i = 0; i < 500; ++i) {
    const Vector f = random_point(rng, 2, 1.5);
    const double v = polar_gauge_eval(k, Covector(f));
    if (std::abs(v - 1) > 1e-9) CHECK((v <= 1) == polar.contains(f));
    // polar gauge equals the gauge of the polar body
    CHECK(v == doctest::Approx(polar.gauge(f)).epsilon(1e-10));
    const Vector g2 = random_point(rng, 2);
    CHECK(polar_gauge_eval(k, Covector(f + g2)) <= v + polar_gauge_eval(k, Covector(g2)) + 1e-12);
  }
}

TEST_CASE("dual body of the triangle is the rotated polar") {
  const auto k = triangle_fixture();
  const auto det = SymplecticForm::standard(1);
  const auto dual = dual_body(k, det);
  CHECK(oracle::vertex_set_error(polygon_vertices(dual), {{-1, 0}, {0.5, -h}, {0.5, h}}) <= 1e-12);
  std::vector<Eigen::Vector2d> rotated;
  for (const auto& p : polygon_vertices(polar_body(k))) rotated.push_back(oracle::rotate(p, -oracle::kPi / 2));
  CHECK(oracle::vertex_set_error(polygon_vertices(dual), rotated) <= 1e-12);
}

TEST_CASE("dual bodies of smooth bodies") {
  const auto det = SymplecticForm::standard(1);
  CHECK(support_distance(dual_body(ConvexBody::euclidean_ball(2), det), ConvexBody::euclidean_ball(2)) < 1e-12);
  const auto w0 = SymplecticForm::standard(2);
  CHECK(support_distance(dual_body(ConvexBody::ellipsoid({1.0, 2.0}), w0), ConvexBody::ellipsoid({1.0, 0.5})) <
        1e-12);
  CHECK_THROWS_AS(dual_body(triangle_fixture(), w0), InvalidInput);
}

TEST_CASE("dual gauge") {
  const auto k = triangle_fixture();
  const auto det = SymplecticForm::standard(1);
  CHECK(dual_gauge_eval(k, det, v2(1, 0)) == doctest::Approx(2.0));
  CHECK(dual_gauge_eval(k, det, v2(0, 1)) == doctest::Approx(kSqrt3));
  CounterRng rng(42);
  const auto disk = ConvexBody::euclidean_ball(2);
  for (int i = 0; i < 20; ++i) CHECK(dual_gauge_eval(disk, det, rng.unit_vector(2)) == doctest::Approx(1.0));

  for (int b = 0; b < 5; ++b) {
    const auto p = b == 0 ? k : random_polygon(rng);
    const auto w = random_form(rng, 2);
    const auto dual = dual_body(p, w);
    for (int i = 0; i < 100; ++i) {
      const Vector x = random_point(rng, 2);
      const double brute = brute_dual_gauge(w, p.as_vpolytope().vertices, x);
      CHECK(std::abs(dual_gauge_eval(p, w, x) - brute) <= 1e-9);
      CHECK(std::abs(dual.gauge(x) - std::max(0.0, brute)) <= 1e-9);
    }
  }
}

TEST_CASE("bidual is the reflected body") {
  const auto det = SymplecticForm::standard(1);
  const auto k = triangle_fixture();
  const auto bi = bidual_body(k, det);
  CHECK(oracle::vertex_set_error(polygon_vertices(bi), {{0, -2}, {-kSqrt3, 1}, {kSqrt3, 1}}) < 1e-12);
  CHECK(support_distance(dual_body(dual_body(k, det), det), bi) < 1e-12);
  const auto ball = ConvexBody::euclidean_ball(4);
  CHECK(support_distance(bidual_body(ball, SymplecticForm::standard(2)), ball) < 1e-12);
  CounterRng rng(43);
  for (int i = 0; i < 3; ++i) {
    const auto p = random_hpolytope(rng, 4, 10, 14);
    CHECK(support_distance(bidual_body(p, SymplecticForm::standard(2)), p.negated()) <= 1e-9);
  }
}

TEST_CASE("homothety detection") {
  const auto det = SymplecticForm::standard(1);
  const auto disk = ConvexBody::euclidean_ball(2);
  const auto a = homothety_detect(disk, dual_body(disk, det));
  REQUIRE(a.has_value());
  CHECK(*a == doctest::Approx(1.0));
  const auto k = triangle_fixture();
  CHECK_FALSE(homothety_detect(k, dual_body(k, det)).has_value());
  const auto three = homothety_detect(k, k.scaled(3.0));
  REQUIRE(three.has_value());
  CHECK(*three == doctest::Approx(3.0));
  // a regular hexagon is a Radon norm: its det-dual is a homothetic copy
  std::vector<Vector> hex;
  for (int i = 0; i < 6; ++i) hex.push_back(v2(std::cos(i * oracle::kPi / 3), std::sin(i * oracle::kPi / 3)));
  const auto hx = ConvexBody::vpolytope(hex);
  // polar vertices sit at 30 + 60k degrees with radius 2/sqrt3; the quarter turn brings them back onto 60k
  const auto radon = homothety_detect(hx, dual_body(hx, det));
  REQUIRE(radon.has_value());
  CHECK(*radon == doctest::Approx(2 / kSqrt3).epsilon(1e-12));
}

TEST_CASE("provenance") {
  const auto r = dual_body_with_provenance(triangle_fixture(), SymplecticForm::standard(1), "tri", "det");
  CHECK(r.source_id == "tri");
  CHECK(r.form_id == "det");
  CHECK(r.body.is_hpolytope());
}

TEST_CASE("membership duality") {
  CounterRng rng(44);
  for (int b = 0; b < 4; ++b) {
    const auto k = b == 0 ? triangle_fixture() : random_polygon(rng);
    const auto polar = polar_body(k);
    const auto pv = polygon_vertices(polar);
    for (int i = 0; i < 200; ++i) {
      const Vector x = random_point(rng, 2);
      double m = -1e300;
      for (const auto& f : pv) m = std::max(m, f.dot(x));
      if (std::abs(m - 1) > 1e-9) CHECK(k.contains(x) == (m <= 1 + 1e-9));
    }
  }
  const auto p4 = random_hpolytope(rng, 4, 10, 14);
  const auto pol4 = polar_body(p4);
  const Matrix& verts = pol4.as_vpolytope().vertices;
  for (int i = 0; i < 200; ++i) {
    const Vector x = random_point(rng, 4, 1.0);
    const double m = (verts.transpose() * x).maxCoeff();
    if (std::abs(m - 1) > 1e-9) CHECK(p4.contains(x) == (m <= 1 + 1e-9));
  }
}
