#include "doctest.h"
#include "oracles.hpp"

#include "gaugekit/duality.hpp"
#include "gaugekit/generators.hpp"
#include "gaugekit/orthogonality.hpp"

using namespace gaugekit;
using oracle::kSqrt3;

namespace {

Vector v2(double a, double b) { return Eigen::Vector2d(a, b); }
Vector v4(double a, double b, double c, double d) { return Eigen::Vector4d(a, b, c, d); }

Matrix span1(const Vector& h) {
  Matrix m(h.size(), 1);
  m.col(0) = h;
  return m;
}

// Brute-force check of x ⊣ y by scanning the line.
bool scan_orthogonal(const Gauge& g, const Vector& x, const Vector& y) {
  const double m = oracle::scan_min([&](double t) { return g(x + t * y); }, -30, 30);
  return m >= g(x) - 1e-7 * std::max(1.0, g(x));
}

}  // namespace

TEST_CASE("minimum of the gauge along a line") {
  const Gauge g(triangle_fixture());
  auto r = min_gauge_on_line(g, v2(1, 0), v2(0, 1));
  CHECK(r.value == doctest::Approx(1 / kSqrt3).epsilon(1e-12));
  CHECK(r.t == doctest::Approx(-1 / kSqrt3).epsilon(1e-9));
  r = min_gauge_on_line(g, v2(0, -1), v2(1, 0));
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(r.t) <= kSqrt3 + 1e-9);
  r = min_gauge_on_line(g, v2(0.3, 0.7), v2(0.6, 1.4));
  CHECK(r.value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(min_gauge_on_line(g, v2(1, 0), v2(0, 0)), InvalidInput);

  CounterRng rng(51);
  for (const auto& k : {random_polygon(rng), v_to_h_2d(random_polygon(rng)), ConvexBody::ellipsoid({0.7, 1.3})}) {
    const Gauge gk(k);
    for (int i = 0; i < 30; ++i) {
      const Vector x = random_point(rng, k.dim()), y = rng.normal_vector(k.dim());
      const auto m = min_gauge_on_line(gk, x, y);
      CHECK(m.value <= gk(x) + 1e-12);
      CHECK(m.value == doctest::Approx(oracle::scan_min([&](double t) { return gk(x + t * y); }, -30, 30)).epsilon(1e-7));
    }
  }
}

TEST_CASE("orthogonality predicate") {
  const Gauge g(triangle_fixture());
  CHECK(is_orthogonal(g, v2(0, -1), v2(1, 0)).is_orthogonal);
  const auto no = is_orthogonal(g, v2(1, 0), v2(0, 1));
  CHECK_FALSE(no.is_orthogonal);
  CHECK(no.min_value == doctest::Approx(1 / kSqrt3));
  CHECK(no.gauge_x == doctest::Approx(kSqrt3 / 2));
  const auto apex = is_orthogonal(g, v2(0, 2), v2(1, 0));
  CHECK(apex.is_orthogonal);
  CHECK((apex.witness - v2(0, 2)).norm() < 1e-12);
  CHECK_THROWS_AS(is_orthogonal(g, v2(0, 0), v2(1, 0)), InvalidInput);

  CounterRng rng(52);
  const auto k = random_polygon(rng);
  const Gauge gk(k);
  for (int i = 0; i < 100; ++i) {
    // x on a boundary, y along a supporting line there
    const Vector x = k.boundary_ray_intersection(rng.unit_vector(2));
    const Vector y = rng.normal_vector(2);
    const bool got = is_orthogonal(gk, x, y).is_orthogonal;
    CHECK(got == scan_orthogonal(gk, x, y));
    if (got) {
      const double a = rng.uniform(0.1, 4), l = rng.uniform(-4, 4);
      CHECK(is_orthogonal(gk, a * x, y).is_orthogonal);
      CHECK(is_orthogonal(gk, x, l * y + 1e-3 * y).is_orthogonal);
    }
  }
}

TEST_CASE("orthogonality flips with the opposite body") {
  CounterRng rng(53);
  const auto k = random_polygon(rng);
  const Gauge g(k), gm(k.negated());
  int agree = 0;
  for (int i = 0; i < 200; ++i) {
    const Vector x = random_point(rng, 2), y = random_point(rng, 2);
    agree += is_orthogonal(g, x, y).is_orthogonal == is_orthogonal(gm, -x, y).is_orthogonal;
  }
  CHECK(agree == 200);
}

TEST_CASE("orthogonality to hyperplanes") {
  const Gauge g(triangle_fixture());
  CHECK(is_orthogonal_to_hyperplane(g, v2(0, -1), span1(v2(1, 0))));
  const Gauge e(ConvexBody::ellipsoid({1.0, 2.0}));
  Matrix tangent(4, 3);
  tangent << 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1;
  CHECK(is_orthogonal_to_hyperplane(e, v4(1, 0, 0, 0), tangent));
  CHECK_FALSE(is_orthogonal_to_hyperplane(e, v4(0, 1, 0, 0), tangent));
  Matrix deficient(4, 3);
  deficient << 0, 0, 0, 1, 2, 0, 0, 0, 1, 0, 0, 1;
  CHECK_THROWS_AS(hyperplane_orthogonality(e, v4(1, 0, 0, 0), deficient), InvalidInput);

  CounterRng rng(54);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = random_hpolytope(rng, 4, 8, 12);
    const Gauge gp(p);
    for (int i = 0; i < 10; ++i) {
      const Vector x = p.boundary_ray_intersection(rng.normal_vector(4));
      // the facet hyperplane through x supports p
      const auto active = (p.as_hpolytope().normals * x).array();
      Eigen::Index row;
      active.maxCoeff(&row);
      const Vector n = p.as_hpolytope().normals.row(row).transpose();
      Eigen::FullPivLU<Matrix> lu(n.transpose());
      const Matrix h = lu.kernel();
      const auto rep = hyperplane_orthogonality(gp, x, h);
      CHECK(rep.is_orthogonal);
      CHECK(rep.min_value == doctest::Approx(1.0).epsilon(1e-9));
      // a random hyperplane is typically not supporting
      Eigen::FullPivLU<Matrix> lu2(rng.normal_vector(4).transpose());
      const auto rnd = hyperplane_orthogonality(gp, x, lu2.kernel());
      if (rnd.is_orthogonal) {
        for (Eigen::Index c = 0; c < 3; ++c) CHECK(is_orthogonal(gp, x, lu2.kernel().col(c)).is_orthogonal);
      }
      CHECK(rnd.min_value <= 1.0 + 1e-12);
    }
  }
  // a nonzero x inside H
  CHECK_FALSE(is_orthogonal_to_hyperplane(e, v4(0, 1, 0, 0), tangent));
}

TEST_CASE("joint hyperplane test is stronger than the axiswise one") {
  // cube [-1,1]^3 is odd-dimensional; use the 4-cube and a hyperplane spanned by
  // diagonal directions so each basis line supports the cube at x but their span does not.
  Matrix normals(8, 4);
  normals << Matrix::Identity(4, 4), -Matrix::Identity(4, 4);
  const Gauge cube(ConvexBody::hpolytope(normals));
  const Vector x = v4(1, 1, 0, 0);
  Matrix h(4, 3);
  h.col(0) = v4(1, 0, 0, 0);   // gauge(x + t e1) >= 1 along the line since x_2 = 1
  h.col(1) = v4(0, 1, 0, 0);   // symmetric
  h.col(2) = v4(0, 0, 1, 0);
  for (Eigen::Index c = 0; c < 3; ++c) CHECK(is_orthogonal(cube, x, h.col(c)).is_orthogonal);
  const auto joint = hyperplane_orthogonality(cube, x, h);
  CHECK_FALSE(joint.is_orthogonal);
  CHECK(joint.min_value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("support pairs") {
  const Gauge g(triangle_fixture());
  const auto tri = support_pair_for_hyperplane(g, span1(v2(1, 0)));
  std::vector<Vector> pts{tri.plus, tri.minus};
  const bool apex_first = std::abs(tri.plus(1) - 2) < 1e-12;
  const Vector apex = apex_first ? tri.plus : tri.minus, bottom = apex_first ? tri.minus : tri.plus;
  CHECK((apex - v2(0, 2)).norm() < 1e-12);
  CHECK(bottom(1) == doctest::Approx(-1.0));
  CHECK(std::abs(bottom(0)) <= kSqrt3 + 1e-12);

  const Gauge disk(ConvexBody::euclidean_ball(2));
  CounterRng rng(55);
  for (int i = 0; i < 10; ++i) {
    const auto p = support_pair_for_hyperplane(disk, span1(rng.normal_vector(2)));
    CHECK((p.plus + p.minus).norm() < 1e-12);
    CHECK(p.plus.norm() == doctest::Approx(1.0));
  }
  const Gauge sq(square_fixture());
  const auto s = support_pair_for_hyperplane(sq, span1(v2(1, 1)));
  CHECK(oracle::vertex_set_error({s.plus, s.minus}, {{1, -1}, {-1, 1}}) < 1e-12);

  for (const auto& k : {random_polygon(rng), ConvexBody::ellipsoid({1.0, 2.0}), random_hpolytope(rng, 4, 8, 12)}) {
    const Gauge gk(k);
    Eigen::FullPivLU<Matrix> lu(rng.normal_vector(k.dim()).transpose());
    const Matrix h = lu.kernel();
    const auto pr = support_pair_for_hyperplane(gk, h);
    CHECK((pr.plus - pr.minus).norm() > 1e-6);
    CHECK(gk(pr.plus) == doctest::Approx(1.0));
    CHECK(gk(pr.minus) == doctest::Approx(1.0));
    CHECK(is_orthogonal_to_hyperplane(gk, pr.plus, h));
    CHECK(is_orthogonal_to_hyperplane(gk, pr.minus, h));
  }
}

TEST_CASE("dual attainment points") {
  const auto det = SymplecticForm::standard(1);
  CHECK((dual_attainment_point(triangle_fixture(), det, v2(1, 0)) - v2(0, 2)).norm() < 1e-12);
  CHECK((dual_attainment_point(ConvexBody::euclidean_ball(2), det, v2(1, 0)) - v2(0, 1)).norm() < 1e-12);
  const auto w0 = SymplecticForm::standard(2);
  const auto e = ConvexBody::ellipsoid({1.0, 2.0});
  CHECK((dual_attainment_point(e, w0, v4(1, 0, 0, 0)) - v4(0, 1, 0, 0)).norm() < 1e-12);
  CHECK_THROWS_AS(dual_attainment_point(e, w0, Vector::Zero(4)), InvalidInput);

  CounterRng rng(56);
  for (const auto& k : {triangle_fixture(), random_polygon(rng), e, random_hpolytope(rng, 4, 8, 12)}) {
    const auto w = k.dim() == 2 ? det : w0;
    const Gauge g(k);
    for (int i = 0; i < 20; ++i) {
      const Vector x = rng.normal_vector(k.dim());
      const Vector y0 = dual_attainment_point(k, w, x);
      CHECK(g(y0) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(std::abs(w(x, y0) - dual_gauge_eval(k, w, x)) <= 1e-10 * (1 + std::abs(w(x, y0))));
      CHECK(w(x, y0) > 0);
      CHECK(is_orthogonal_to_hyperplane(g, y0, complement_hyperplane(w, x)));
    }
  }
}

TEST_CASE("complement hyperplane") {
  CounterRng rng(57);
  const auto w = random_form(rng, 4);
  const Vector x = rng.normal_vector(4);
  const Matrix h = complement_hyperplane(w, x);
  REQUIRE(h.cols() == 3);
  for (Eigen::Index c = 0; c < 3; ++c) CHECK(std::abs(w(x, h.col(c))) < 1e-12);
  CHECK(Eigen::FullPivLU<Matrix>(h).rank() == 3);
}

TEST_CASE("faces of the square correspond to faces of its dual") {
  const auto det = SymplecticForm::standard(1);
  const auto k = square_fixture();
  const auto dual = dual_body(k, det);
  const auto kv = polygon_vertices(k), dv = polygon_vertices(dual);
  // vertex v of K: {x in K^w : w(x, v) = 1} is an edge of K^w
  for (const auto& v : kv) {
    std::vector<Eigen::Vector2d> face;
    for (const auto& x : dv)
      if (std::abs(det(x, v) - 1) < 1e-12) face.push_back(x);
    REQUIRE(face.size() == 2);
    CHECK(k.face_query(v).face_dim == 0);
    CHECK(dual.face_query(0.5 * (face[0] + face[1])).face_dim == 1);
  }
  // vertex x of K^w: {y in K : w(x, y) = 1} is an edge of K
  for (const auto& x : dv) {
    std::vector<Eigen::Vector2d> face;
    for (const auto& y : kv)
      if (std::abs(det(x, y) - 1) < 1e-12) face.push_back(y);
    REQUIRE(face.size() == 2);
    CHECK(dual.face_query(x).face_dim == 0);
    CHECK_FALSE(dual.face_query(x).smooth_at);
    CHECK(k.face_query(0.5 * (face[0] + face[1])).smooth_at);
  }
}

TEST_CASE("reversal fails in dimension four without the hyperplane") {
  // E(1,2) with w0: x ⊣ y and w(y, x) > 0, yet y is not w-orthogonal to x.
  const auto e = ConvexBody::ellipsoid({1.0, 2.0});
  const auto w0 = SymplecticForm::standard(2);
  const Gauge g(e), gd(dual_body(e, w0));
  const Vector x = v4(1, 0, 1, 0), y = v4(1, -1, -4, 0);
  CHECK(is_orthogonal(g, x, y).is_orthogonal);
  CHECK(w0(y, x) == doctest::Approx(1.0));
  CHECK_FALSE(is_orthogonal(gd, y, x).is_orthogonal);

  // random search finds more of them
  CounterRng rng(58);
  const Matrix& q = e.as_smooth().q;
  int found = 0;
  for (int i = 0; i < 100; ++i) {
    const Vector xs = rng.normal_vector(4);
    Vector ys = rng.normal_vector(4);
    const Vector n = q * xs;
    ys -= n * (n.dot(ys) / n.squaredNorm());
    if (w0(ys, xs) <= 0) ys = -ys;
    if (!is_orthogonal(g, xs, ys).is_orthogonal) continue;
    found += !is_orthogonal(gd, ys, xs).is_orthogonal;
  }
  CHECK(found > 50);
}
