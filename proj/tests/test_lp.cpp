#include "doctest.h"

#include "gaugekit/lp.hpp"
#include "gaugekit/random.hpp"

#include <limits>

using namespace gaugekit;

namespace {

// Optimum of a bounded 2-variable LP with x >= 0 by enumerating constraint-pair intersections.
double enumerate_2d(const Matrix& a, const Vector& b, const Vector& c) {
  Matrix rows(a.rows() + 2, 2);
  Vector rhs(a.rows() + 2);
  rows << a, -Matrix::Identity(2, 2);
  rhs << b, Vector::Zero(2);
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    for (Eigen::Index j = i + 1; j < rows.rows(); ++j) {
      Eigen::Matrix2d m;
      m << rows.row(i), rows.row(j);
      if (std::abs(m.determinant()) < 1e-12) continue;
      const Eigen::Vector2d p = m.inverse() * Eigen::Vector2d(rhs(i), rhs(j));
      if (((rows * p - rhs).array() <= 1e-9).all()) best = std::min(best, c.dot(p));
    }
  return best;
}

}  // namespace

TEST_CASE("textbook maximization") {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
  lp::Problem p(2);
  p.objective = Vector::Zero(2);
  p.objective << -3, -5;
  p.add_le(Eigen::Vector2d(1, 0), 4);
  p.add_le(Eigen::Vector2d(0, 2), 12);
  p.add_le(Eigen::Vector2d(3, 2), 18);
  const auto s = lp::solve(p);
  REQUIRE(s.optimal());
  CHECK(s.value == doctest::Approx(-36).epsilon(1e-12));
  CHECK(s.x(0) == doctest::Approx(2));
  CHECK(s.x(1) == doctest::Approx(6));
}

TEST_CASE("equality constraints, free variables and negative rhs") {
  // min x + y s.t. x - y = -1, x >= -3 (x free), y >= 0
  lp::Problem p(2);
  p.objective << 1, 1;
  p.set_free(0);
  p.add_eq(Eigen::Vector2d(1, -1), -1);
  p.add_le(Eigen::Vector2d(-1, 0), 3);
  const auto s = lp::solve(p);
  REQUIRE(s.optimal());
  // y = x + 1 >= 0 binds before x >= -3
  CHECK(s.value == doctest::Approx(-1));
  CHECK(s.x(0) == doctest::Approx(-1));
  CHECK(s.x(1) == doctest::Approx(0).epsilon(1e-12));
}

TEST_CASE("infeasible and unbounded detection") {
  lp::Problem inf(1);
  inf.objective << 1;
  inf.add_le(Vector::Constant(1, 1.0), -1);
  CHECK(lp::solve(inf).status == lp::Status::infeasible);

  lp::Problem unb(2);
  unb.objective << -1, 0;
  unb.add_le(Eigen::Vector2d(0, 1), 1);
  CHECK(lp::solve(unb).status == lp::Status::unbounded);
}

TEST_CASE("random bounded 2-variable programs agree with vertex enumeration") {
  CounterRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 3 + static_cast<int>(rng.uniform() * 6);
    Matrix a(m, 2);
    Vector b(m);
    for (int i = 0; i < m; ++i) {
      a.row(i) = rng.unit_vector(2).transpose();
      b(i) = rng.uniform(0.2, 2.0);
    }
    // box keeps it bounded
    Matrix box(2, 2);
    box << 1, 0, 0, 1;
    Matrix all(m + 2, 2);
    all << a, box;
    Vector rhs(m + 2);
    rhs << b, 5.0, 5.0;
    const Vector c = rng.normal_vector(2);
    lp::Problem p(2);
    p.objective = c;
    for (Eigen::Index i = 0; i < all.rows(); ++i) p.add_le(all.row(i).transpose(), rhs(i));
    const auto s = lp::solve(p);
    REQUIRE(s.optimal());
    CHECK(s.value == doctest::Approx(enumerate_2d(all, rhs, c)).epsilon(1e-9));
    CHECK(((all * s.x - rhs).array() <= 1e-9).all());
  }
}
