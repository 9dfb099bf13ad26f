#include "doctest.h"
#include "oracles.hpp"

#include "gaugekit/directions.hpp"
#include "gaugekit/duality.hpp"
#include "gaugekit/generators.hpp"
#include "gaugekit/gauge.hpp"
#include "gaugekit/isometry.hpp"

using namespace gaugekit;
using oracle::kPi;

namespace {

Matrix rotation(double a) {
  Matrix r(2, 2);
  r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  return r;
}

ConvexBody translated_triangle() {
  Matrix v = triangle_fixture().as_vpolytope().vertices;
  v.row(0).array() += 0.1;
  return ConvexBody::vpolytope(v);
}

}  // namespace

TEST_CASE("affine decomposition") {
  AffineMap t{Matrix::Identity(2, 2), Eigen::Vector2d(1, 2)};
  auto parts = decompose_affine(t);
  CHECK(parts.linear == Matrix::Identity(2, 2));
  CHECK((parts.translation - Eigen::Vector2d(1, 2)).norm() == 0.0);
  parts = decompose_affine(AffineMap::linear_only(rotation(0.3)));
  CHECK(parts.translation.norm() == 0.0);
  CounterRng rng(61);
  const AffineMap r{rng.normal_vector(3).asDiagonal().toDenseMatrix() + Matrix::Random(3, 3), rng.normal_vector(3)};
  const auto p = decompose_affine(r);
  for (int i = 0; i < 100; ++i) {
    const Vector x = rng.normal_vector(3);
    CHECK((r(x) - (p.linear * x + p.translation)).norm() < 1e-12);
  }
}

TEST_CASE("gauge isometries") {
  const auto k = triangle_fixture();
  CHECK(is_gauge_isometry(AffineMap::linear_only(rotation(2 * kPi / 3)), k, k).is_isometry);
  CHECK(is_gauge_isometry(AffineMap{Matrix::Identity(2, 2), Eigen::Vector2d(5, -3)}, k, k).is_isometry);
  const auto rej = is_gauge_isometry(AffineMap::linear_only(Matrix::Identity(2, 2)), k, translated_triangle());
  CHECK_FALSE(rej.is_isometry);
  const auto sing = is_gauge_isometry(AffineMap::linear_only(Matrix::Zero(2, 2)), k, k);
  CHECK_FALSE(sing.is_isometry);
  CHECK_FALSE(sing.diagnostic.empty());
  CHECK_FALSE(is_gauge_isometry(AffineMap::linear_only(rotation(kPi / 3)), k, k).is_isometry);
  // sampling path: smooth bodies
  const auto e = ConvexBody::quadratic((Matrix(2, 2) << 1, 0, 0, 4).finished());
  Matrix stretch(2, 2);
  stretch << 1, 0, 0, 0.5;
  CHECK(is_gauge_isometry(AffineMap::linear_only(stretch), ConvexBody::euclidean_ball(2), e).is_isometry);
}

TEST_CASE("verified isometries preserve distances, polar gauges and the symmetrized norm") {
  CounterRng rng(62);
  const auto k1 = random_polygon(rng);
  Matrix t(2, 2);
  t << 1.3, 0.4, -0.2, 0.9;
  const auto k2 = k1.linear_image(t);
  const auto map = AffineMap::linear_only(t);
  REQUIRE(is_gauge_isometry(map, k1, k2).is_isometry);
  const Gauge g1(k1), g2(k2);
  const Matrix adj = adjoint_map(map);
  for (int i = 0; i < 300; ++i) {
    const Vector x = random_point(rng, 2), z = random_point(rng, 2);
    CHECK(std::abs(distance(g1, x, z) - distance(g2, t * x, t * z)) <= 1e-9);
    CHECK(std::abs(symmetrized_norm(g1, x - z) - symmetrized_norm(g2, t * (x - z))) <= 1e-9);
    const Vector f = random_point(rng, 2);
    CHECK(std::abs(polar_gauge_eval(k1, Covector(adj * f)) - polar_gauge_eval(k2, Covector(f))) <= 1e-9);
  }
}

TEST_CASE("adjoint maps") {
  Matrix d(2, 2);
  d << 2, 0, 0, 3;
  CHECK(adjoint_map(AffineMap::linear_only(d)) == d);
  CHECK((adjoint_map(AffineMap::linear_only(rotation(0.4))) - rotation(-0.4)).norm() < 1e-15);
  CHECK_THROWS_AS(adjoint_map(AffineMap{d, Eigen::Vector2d(1, 0)}), InvalidInput);
  CounterRng rng(63);
  const Matrix s = Matrix::Random(3, 3), t = Matrix::Random(3, 3);
  const Matrix lhs = adjoint_map(AffineMap::linear_only(s * t));
  const Matrix rhs = adjoint_map(AffineMap::linear_only(t)) * adjoint_map(AffineMap::linear_only(s));
  CHECK((lhs - rhs).norm() < 1e-12);
  for (int i = 0; i < 50; ++i) {
    const Vector f = rng.normal_vector(3), x = rng.normal_vector(3);
    const Vector tf = adjoint_map(AffineMap::linear_only(t)) * f;
    CHECK(std::abs(tf.dot(x) - f.dot(t * x)) < 1e-12);
  }
}

TEST_CASE("dual isometries") {
  const auto det = SymplecticForm::standard(1);
  const auto k = triangle_fixture();
  const Matrix r = rotation(2 * kPi / 3);
  CounterRng rng(64);
  for (int i = 0; i < 200; ++i) {
    const Vector x = random_point(rng, 2);
    CHECK(std::abs(dual_gauge_eval(k, det, r * x) - dual_gauge_eval(k, det, x)) <= 1e-9);
  }
  // T = id gives the form-change map
  const auto w1 = random_form(rng, 4), w2 = random_form(rng, 4);
  const Matrix change = dual_isometry(Matrix::Identity(4, 4), w1, w2);
  CHECK((change - w1.inverse_transpose() * w2.matrix().transpose()).norm() < 1e-10);

  // diag(2, 1/2) preserves det, so it preserves the dual gauges of the square and its image
  Matrix d(2, 2);
  d << 2, 0, 0, 0.5;
  const auto sq = square_fixture();
  const auto img = sq.linear_image(d);
  for (int i = 0; i < 100; ++i) {
    const Vector x = random_point(rng, 2);
    CHECK(std::abs(dual_gauge_eval(img, det, d * x) - dual_gauge_eval(sq, det, x)) <= 1e-9);
  }
  // general contract: T^w carries the dual of K_Y onto the dual of K_X
  const auto p = random_hpolytope(rng, 4, 8, 12);
  const Matrix t = Matrix::Identity(4, 4) + 0.3 * Matrix::Random(4, 4);
  const auto py = p.linear_image(t);
  const Matrix tw = dual_isometry(t, w1, w2);
  CHECK(support_distance(dual_body(py, w2).linear_image(tw), dual_body(p, w1)) <= 1e-9);
  CHECK_THROWS_AS(dual_isometry(Matrix::Zero(4, 4), w1, w2), InvalidInput);
}

TEST_CASE("planar linear equivalence search") {
  const auto k = triangle_fixture();
  const auto rotated = k.linear_image(rotation(2 * kPi / 3));
  const auto found = linear_equivalence_search_2d(k, rotated);
  REQUIRE(found.has_value());
  CHECK(is_gauge_isometry(*found, k, rotated).is_isometry);
  CHECK_FALSE(linear_equivalence_search_2d(k, translated_triangle()).has_value());
  const auto twice = linear_equivalence_search_2d(k, k.scaled(2.0));
  REQUIRE(twice.has_value());
  CHECK((twice->linear - 2 * Matrix::Identity(2, 2)).norm() < 1e-9);
  CHECK_FALSE(linear_equivalence_search_2d(k, square_fixture()).has_value());
  CHECK_THROWS_AS(linear_equivalence_search_2d(k, ConvexBody::euclidean_ball(2)), InvalidInput);

  CounterRng rng(65);
  for (int i = 0; i < 10; ++i) {
    const auto p = random_polygon(rng);
    Matrix t = Matrix::Identity(2, 2) + 0.4 * Matrix::Random(2, 2);
    if (i % 2) t.col(0) *= -1;  // orientation reversing
    const auto q = p.linear_image(t);
    const auto m = linear_equivalence_search_2d(p, q);
    REQUIRE(m.has_value());
    CHECK(is_gauge_isometry(*m, p, q).is_isometry);
  }
}
