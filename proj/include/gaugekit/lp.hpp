#pragma once

// Dense two-phase simplex for the small linear programs behind polytope
// membership, support and gauge queries. Bland's rule throughout, so runs are
// deterministic and ties resolve to the lowest-index optimal vertex.

#include "gaugekit/common.hpp"

#include <vector>

namespace gaugekit::lp {

struct Problem {
  Vector objective;  // minimize objective . x
  Matrix a_ub;       // a_ub x <= b_ub
  Vector b_ub;
  Matrix a_eq;       // a_eq x == b_eq
  Vector b_eq;
  std::vector<bool> free_vars;  // empty: every variable is >= 0

  explicit Problem(Eigen::Index num_vars);
  Eigen::Index num_vars() const { return objective.size(); }
  void add_le(const Vector& row, double rhs);
  void add_eq(const Vector& row, double rhs);
  void set_free(Eigen::Index var, bool is_free = true);
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
  Status status = Status::infeasible;
  Vector x;
  double value = 0.0;
  bool optimal() const { return status == Status::optimal; }
};

Solution solve(const Problem& problem);

}  // namespace gaugekit::lp
