#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace gaugekit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Malformed input: wrong dimensions, degenerate data, violated preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to reach its contract (drift, unbounded LP, ...).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidInput(what);
}

inline void require_same_dim(Eigen::Index a, Eigen::Index b, const char* where) {
  if (a != b)
    throw InvalidInput(std::string(where) + ": dimension mismatch (" + std::to_string(a) +
                       " vs " + std::to_string(b) + ")");
}

// Default geometric tolerance; overridable through GAUGEKIT_EPS.
double default_eps();

}  // namespace gaugekit
