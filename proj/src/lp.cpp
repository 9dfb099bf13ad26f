#include "gaugekit/lp.hpp"

#include <cmath>
#include <limits>

namespace gaugekit::lp {

Problem::Problem(Eigen::Index num_vars)
    : objective(Vector::Zero(num_vars)),
      a_ub(0, num_vars),
      b_ub(0),
      a_eq(0, num_vars),
      b_eq(0),
      free_vars(static_cast<std::size_t>(num_vars), false) {}

void Problem::add_le(const Vector& row, double rhs) {
  require_same_dim(row.size(), num_vars(), "lp::add_le");
  a_ub.conservativeResize(a_ub.rows() + 1, num_vars());
  a_ub.row(a_ub.rows() - 1) = row.transpose();
  b_ub.conservativeResize(b_ub.size() + 1);
  b_ub(b_ub.size() - 1) = rhs;
}

void Problem::add_eq(const Vector& row, double rhs) {
  require_same_dim(row.size(), num_vars(), "lp::add_eq");
  a_eq.conservativeResize(a_eq.rows() + 1, num_vars());
  a_eq.row(a_eq.rows() - 1) = row.transpose();
  b_eq.conservativeResize(b_eq.size() + 1);
  b_eq(b_eq.size() - 1) = rhs;
}

void Problem::set_free(Eigen::Index var, bool is_free) {
  free_vars.at(static_cast<std::size_t>(var)) = is_free;
}

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-11;
constexpr int kMaxPivots = 200000;

// Tableau in standard form: rows 0..m-1 are constraints, row m holds reduced
// costs; the last column is the right-hand side.
class Tableau {
 public:
  Tableau(Matrix t, std::vector<int> basis) : t_(std::move(t)), basis_(std::move(basis)) {}

  Eigen::Index rows() const { return t_.rows() - 1; }
  Eigen::Index cols() const { return t_.cols() - 1; }
  double rhs(Eigen::Index i) const { return t_(i, cols()); }
  double at(Eigen::Index i, Eigen::Index j) const { return t_(i, j); }
  int basic(Eigen::Index i) const { return basis_[static_cast<std::size_t>(i)]; }
  double objective_value() const { return -t_(rows(), cols()); }

  void set_costs(const Vector& cost) {
    const auto m = rows();
    t_.row(m).head(cols()) = cost.transpose();
    t_(m, cols()) = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      const double cb = cost(basic(i));
      if (cb != 0.0) t_.row(m) -= cb * t_.row(i);
    }
  }

  void pivot(Eigen::Index r, Eigen::Index s) {
    t_.row(r) /= t_(r, s);
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      const double f = t_(i, s);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    basis_[static_cast<std::size_t>(r)] = static_cast<int>(s);
  }

  // Runs Bland's rule until optimal or unbounded; columns >= allowed_cols never enter.
  Status optimize(Eigen::Index allowed_cols) {
    const auto m = rows();
    for (int iter = 0; iter < kMaxPivots; ++iter) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < allowed_cols; ++j) {
        if (t_(m, j) < -kCostTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Status::optimal;

      Eigen::Index leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < m; ++i) {
        const double a = t_(i, enter);
        if (a <= kPivotTol) continue;
        const double ratio = std::max(rhs(i), 0.0) / a;
        if (ratio < best - 1e-13 ||
            (std::abs(ratio - best) <= 1e-13 && basic(i) < basic(leave))) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return Status::unbounded;
      pivot(leave, enter);
    }
    throw NumericalFailure("lp: pivot limit exceeded");
  }

 private:
  Matrix t_;
  std::vector<int> basis_;
};

}  // namespace

Solution solve(const Problem& problem) {
  const auto n = problem.num_vars();
  const auto m_ub = problem.a_ub.rows();
  const auto m_eq = problem.a_eq.rows();
  const auto m = m_ub + m_eq;
  require(problem.free_vars.size() == static_cast<std::size_t>(n), "lp: free_vars size");

  // Column layout: structural (free vars split in two), slacks, artificials.
  std::vector<Eigen::Index> pos_col(static_cast<std::size_t>(n));
  std::vector<Eigen::Index> neg_col(static_cast<std::size_t>(n), -1);
  Eigen::Index ncols = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    pos_col[static_cast<std::size_t>(j)] = ncols++;
    if (problem.free_vars[static_cast<std::size_t>(j)]) neg_col[static_cast<std::size_t>(j)] = ncols++;
  }
  const Eigen::Index slack0 = ncols;
  ncols += m_ub;

  Matrix rows_mat = Matrix::Zero(m, ncols);
  Vector rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool ub = i < m_ub;
    const auto src = ub ? problem.a_ub.row(i) : problem.a_eq.row(i - m_ub);
    for (Eigen::Index j = 0; j < n; ++j) {
      rows_mat(i, pos_col[static_cast<std::size_t>(j)]) = src(j);
      if (neg_col[static_cast<std::size_t>(j)] >= 0) rows_mat(i, neg_col[static_cast<std::size_t>(j)]) = -src(j);
    }
    if (ub) rows_mat(i, slack0 + i) = 1.0;
    rhs(i) = ub ? problem.b_ub(i) : problem.b_eq(i - m_ub);
  }

  // Slack columns seed the basis where the row is already feasible; every
  // other row gets an artificial.
  std::vector<int> basis(static_cast<std::size_t>(m), -1);
  std::vector<Eigen::Index> needs_artificial;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (i < m_ub && rhs(i) >= 0.0) {
      basis[static_cast<std::size_t>(i)] = static_cast<int>(slack0 + i);
    } else {
      if (rhs(i) < 0.0) {
        rows_mat.row(i) *= -1.0;
        rhs(i) = -rhs(i);
      }
      needs_artificial.push_back(i);
    }
  }
  const Eigen::Index art0 = ncols;
  const auto num_art = static_cast<Eigen::Index>(needs_artificial.size());
  const Eigen::Index total = ncols + num_art;

  Matrix t = Matrix::Zero(m + 1, total + 1);
  t.block(0, 0, m, ncols) = rows_mat;
  t.block(0, total, m, 1) = rhs;
  for (Eigen::Index k = 0; k < num_art; ++k) {
    const auto i = needs_artificial[static_cast<std::size_t>(k)];
    t(i, art0 + k) = 1.0;
    basis[static_cast<std::size_t>(i)] = static_cast<int>(art0 + k);
  }
  Tableau tab(std::move(t), std::move(basis));

  if (num_art > 0) {
    Vector phase1 = Vector::Zero(total);
    phase1.tail(num_art).setOnes();
    tab.set_costs(phase1);
    tab.optimize(total);
    const double scale = 1.0 + rhs.cwiseAbs().maxCoeff();
    if (tab.objective_value() > 1e-9 * scale) return Solution{Status::infeasible, Vector(), 0.0};
    // Drive zero-level artificials out of the basis where possible.
    for (Eigen::Index i = 0; i < m; ++i) {
      if (tab.basic(i) < art0) continue;
      for (Eigen::Index j = 0; j < art0; ++j) {
        if (std::abs(tab.at(i, j)) > 1e-9) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  Vector cost = Vector::Zero(total);
  for (Eigen::Index j = 0; j < n; ++j) {
    cost(pos_col[static_cast<std::size_t>(j)]) = problem.objective(j);
    if (neg_col[static_cast<std::size_t>(j)] >= 0) cost(neg_col[static_cast<std::size_t>(j)]) = -problem.objective(j);
  }
  tab.set_costs(cost);
  if (tab.optimize(art0) == Status::unbounded) return Solution{Status::unbounded, Vector(), 0.0};

  Vector standard = Vector::Zero(total);
  for (Eigen::Index i = 0; i < m; ++i) standard(tab.basic(i)) = tab.rhs(i);
  Vector x(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    x(j) = standard(pos_col[static_cast<std::size_t>(j)]);
    if (neg_col[static_cast<std::size_t>(j)] >= 0) x(j) -= standard(neg_col[static_cast<std::size_t>(j)]);
  }
  return Solution{Status::optimal, x, problem.objective.dot(x)};
}

}  // namespace gaugekit::lp
