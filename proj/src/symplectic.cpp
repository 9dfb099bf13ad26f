#include "gaugekit/symplectic.hpp"

#include <cmath>
#include <cstdlib>

namespace gaugekit {

double default_eps() {
  static const double eps = [] {
    if (const char* env = std::getenv("GAUGEKIT_EPS")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end != env && v > 0.0 && std::isfinite(v)) return v;
    }
    return 1e-9;
  }();
  return eps;
}

SymplecticForm::SymplecticForm(Matrix omega) : omega_(std::move(omega)) {
  require(omega_.rows() == omega_.cols(), "symplectic form: matrix must be square");
  require(omega_.rows() >= 2 && omega_.rows() % 2 == 0, "symplectic form: dimension must be even and >= 2");
  require(omega_.allFinite(), "symplectic form: non-finite entries");
  const double asym = (omega_ + omega_.transpose()).cwiseAbs().maxCoeff();
  require(asym <= 1e-12, "symplectic form: matrix is not skew-symmetric");
  // Exact skew part, so identities like W^T = -W hold bitwise.
  omega_ = 0.5 * (omega_ - omega_.transpose());
  Eigen::PartialPivLU<Matrix> lu(omega_);
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  require(min_pivot > 1e-12, "symplectic form: matrix is degenerate");
  inv_t_ = lu.inverse().transpose();
}

SymplecticForm SymplecticForm::standard(int n) {
  require(n >= 1, "standard form: n must be positive");
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    m(2 * j, 2 * j + 1) = 1.0;
    m(2 * j + 1, 2 * j) = -1.0;
  }
  return SymplecticForm(std::move(m));
}

double SymplecticForm::operator()(const Vector& x, const Vector& y) const {
  require_same_dim(x.size(), dim(), "eval_form");
  require_same_dim(y.size(), dim(), "eval_form");
  return x.dot(omega_ * y);
}

SymplecticForm SymplecticForm::scaled(double alpha) const {
  require(alpha != 0.0, "symplectic form: zero scale");
  return SymplecticForm(alpha * omega_);
}

PlaneSubspace::PlaneSubspace(Vector u, Vector v) : u_(std::move(u)), v_(std::move(v)) {
  require_same_dim(u_.size(), v_.size(), "plane");
  require(u_.size() >= 2, "plane: ambient dimension must be >= 2");
  const double nu = u_.norm();
  const double nv = v_.norm();
  require(nu > 0.0 && nv > 0.0, "plane: zero basis vector");
  Matrix normalized(u_.size(), 2);
  normalized.col(0) = u_ / nu;
  normalized.col(1) = v_ / nv;
  Eigen::JacobiSVD<Matrix> svd(normalized);
  require(svd.singularValues()(1) > 1e-10, "plane: basis vectors are linearly dependent");
}

Matrix PlaneSubspace::basis() const {
  Matrix b(dim(), 2);
  b.col(0) = u_;
  b.col(1) = v_;
  return b;
}

double eval_form(const SymplecticForm& form, const Vector& x, const Vector& y) { return form(x, y); }

Vector identify(const SymplecticForm& form, const Covector& f) {
  require_same_dim(f.dim(), form.dim(), "identify");
  return form.inverse_transpose() * f.coords;
}

Covector identify_inverse(const SymplecticForm& form, const Vector& x) {
  require_same_dim(x.size(), form.dim(), "identify_inverse");
  return Covector(form.matrix().transpose() * x);
}

namespace {

// Orthonormal null-space basis of the rows of `m` (columns of the result).
Matrix null_space(const Matrix& m, Eigen::Index cols) {
  if (m.rows() == 0) return Matrix::Identity(cols, cols);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = sv.size() > 0 ? std::max(sv(0), 1.0) : 1.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-10 * scale) ++rank;
  return svd.matrixV().rightCols(cols - rank);
}

}  // namespace

Matrix symplectic_complement(const SymplecticForm& form, const std::vector<Vector>& span) {
  const auto d = form.dim();
  Matrix rows(static_cast<Eigen::Index>(span.size()), d);
  for (std::size_t i = 0; i < span.size(); ++i) {
    require_same_dim(span[i].size(), d, "symplectic_complement");
    require(span[i].allFinite(), "symplectic_complement: non-finite vector");
    // w(x, s) = (W s) . x
    rows.row(static_cast<Eigen::Index>(i)) = (form.matrix() * span[i]).transpose();
  }
  return null_space(rows, d);
}

Vector canonical_direction(const Vector& v) {
  const double n = v.norm();
  require(n > 0.0, "canonical_direction: zero vector");
  Vector u = v / n;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (std::abs(u(i)) > 1e-12) {
      if (u(i) < 0.0) u = -u;
      break;
    }
  }
  return u;
}

Vector hyperplane_characteristic_direction(const SymplecticForm& form, const Covector& normal) {
  require_same_dim(normal.dim(), form.dim(), "hyperplane_characteristic_direction");
  require(normal.coords.norm() > 0.0, "hyperplane_characteristic_direction: zero normal");
  // w(x, z) = (W^T x) . z vanishes on ker(n) iff W^T x is parallel to n.
  return canonical_direction(identify(form, normal));
}

Matrix SymplecticBasis::ordered() const {
  const auto n = static_cast<Eigen::Index>(xs.size());
  const auto d = n == 0 ? 0 : xs.front().size();
  Matrix m(d, 2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    m.col(j) = xs[static_cast<std::size_t>(j)];
    m.col(n + j) = ys[static_cast<std::size_t>(j)];
  }
  return m;
}

SymplecticBasis symplectic_basis(const SymplecticForm& form) {
  const auto d = form.dim();
  std::vector<Vector> pool;
  for (Eigen::Index i = 0; i < d; ++i) pool.push_back(Vector::Unit(d, i));

  SymplecticBasis basis;
  while (!pool.empty()) {
    // Pivot: the pair with the largest |w(w_i, w_j)|.
    std::size_t bi = 0, bj = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        const double w = std::abs(form(pool[i], pool[j]));
        if (w > best) {
          best = w;
          bi = i;
          bj = j;
        }
      }
    if (best <= 1e-14) throw NumericalFailure("symplectic_basis: form degenerate on remaining subspace");
    const Vector x = pool[bi];
    const Vector y = pool[bj] / form(pool[bi], pool[bj]);
    basis.xs.push_back(x);
    basis.ys.push_back(y);

    std::vector<Vector> rest;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (k == bi || k == bj) continue;
      const Vector& w = pool[k];
      rest.push_back(w + form(w, x) * y - form(w, y) * x);
    }
    pool = std::move(rest);
  }
  return basis;
}

bool is_symplectic_plane(const SymplecticForm& form, const PlaneSubspace& plane) {
  require_same_dim(plane.dim(), form.dim(), "is_symplectic_plane");
  return std::abs(form(plane.u(), plane.v())) > 1e-10;
}

Eigen::Vector2d plane_coordinates(const SymplecticForm& form, const PlaneSubspace& plane,
                                  const Vector& x) {
  require_same_dim(x.size(), form.dim(), "project_onto_plane");
  const double c = form(plane.u(), plane.v());
  require(std::abs(c) > 1e-10, "project_onto_plane: plane is not symplectic");
  return {form(x, plane.v()) / c, -form(x, plane.u()) / c};
}

Vector project_onto_plane(const SymplecticForm& form, const PlaneSubspace& plane, const Vector& x) {
  const Eigen::Vector2d st = plane_coordinates(form, plane, x);
  return st(0) * plane.u() + st(1) * plane.v();
}

SymplecticForm restrict_form(const SymplecticForm& form, const PlaneSubspace& plane) {
  require(is_symplectic_plane(form, plane), "restrict_form: plane is not symplectic");
  const double c = form(plane.u(), plane.v());
  Matrix m(2, 2);
  m << 0.0, c, -c, 0.0;
  return SymplecticForm(std::move(m));
}

bool is_symplectic_map(const SymplecticForm& form, const Matrix& map, double tol) {
  require(map.rows() == form.dim() && map.cols() == form.dim(), "is_symplectic_map: dimension mismatch");
  return (map.transpose() * form.matrix() * map - form.matrix()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace gaugekit
