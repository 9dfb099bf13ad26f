#pragma once

// Symplectic linear algebra on R^{2n}: forms, the identification of covectors
// with vectors, complements, Darboux bases and projections onto symplectic
// planes. Coordinates are ordered (x_1, y_1, ..., x_n, y_n).

#include "gaugekit/common.hpp"

#include <vector>

namespace gaugekit {

// A linear functional, stored by its coefficients in the dual basis.
struct Covector {
  Vector coords;

  Covector() = default;
  explicit Covector(Vector c) : coords(std::move(c)) {}
  Eigen::Index dim() const { return coords.size(); }
  double operator()(const Vector& x) const { return coords.dot(x); }
};

// Nondegenerate skew form w(x, y) = x^T W y.
class SymplecticForm {
 public:
  explicit SymplecticForm(Matrix omega);

  // Block-diagonal [[0,1],[-1,0]] blocks; in R^2 this is the determinant.
  static SymplecticForm standard(int n);

  Eigen::Index dim() const { return omega_.rows(); }
  const Matrix& matrix() const { return omega_; }
  // W^{-T}; maps a covector to the vector identified with it.
  const Matrix& inverse_transpose() const { return inv_t_; }

  double operator()(const Vector& x, const Vector& y) const;
  SymplecticForm scaled(double alpha) const;

 private:
  Matrix omega_;
  Matrix inv_t_;
};

// A two-dimensional subspace spanned by u and v.
class PlaneSubspace {
 public:
  PlaneSubspace(Vector u, Vector v);
  const Vector& u() const { return u_; }
  const Vector& v() const { return v_; }
  Eigen::Index dim() const { return u_.size(); }
  // d x 2 matrix [u v].
  Matrix basis() const;

 private:
  Vector u_;
  Vector v_;
};

double eval_form(const SymplecticForm& form, const Vector& x, const Vector& y);

// The unique x_f with w(x_f, .) = f, i.e. W^T x_f = f.
Vector identify(const SymplecticForm& form, const Covector& f);
// Inverse of identify: f = W^T x.
Covector identify_inverse(const SymplecticForm& form, const Vector& x);

// Orthonormal basis (columns) of {x : w(x, s) = 0 for every s in span}.
Matrix symplectic_complement(const SymplecticForm& form, const std::vector<Vector>& span);

// The direction x inside H = ker(normal) with H = {x}^perp, as a unit vector
// whose first nonzero coordinate is positive. Only the direction is meaningful.
Vector hyperplane_characteristic_direction(const SymplecticForm& form, const Covector& normal);

struct SymplecticBasis {
  std::vector<Vector> xs;
  std::vector<Vector> ys;

  // Columns ordered (x_1, ..., x_n, y_1, ..., y_n).
  Matrix ordered() const;
  PlaneSubspace plane(std::size_t j) const { return PlaneSubspace(xs.at(j), ys.at(j)); }
};

// Skew Gram-Schmidt: w(x_i, x_j) = w(y_i, y_j) = 0, w(x_i, y_j) = delta_ij.
SymplecticBasis symplectic_basis(const SymplecticForm& form);

bool is_symplectic_plane(const SymplecticForm& form, const PlaneSubspace& plane);

// Coordinates (s, t) of the projection of x onto Y along the complement of Y,
// so that the projection is s*u + t*v.
Eigen::Vector2d plane_coordinates(const SymplecticForm& form, const PlaneSubspace& plane,
                                  const Vector& x);
Vector project_onto_plane(const SymplecticForm& form, const PlaneSubspace& plane, const Vector& x);

// The 2x2 matrix of w restricted to Y in (u, v) coordinates.
SymplecticForm restrict_form(const SymplecticForm& form, const PlaneSubspace& plane);

bool is_symplectic_map(const SymplecticForm& form, const Matrix& map, double tol = 1e-10);

// Unit vector, first coordinate with |c| > 1e-12 made positive.
Vector canonical_direction(const Vector& v);

}  // namespace gaugekit
