#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace symbell {

/// max c.x subject to A x = b, x >= 0.
struct LinearProgram {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

struct LpSolution {
  double objective = 0;
  Eigen::VectorXd x;
  int iterations = 0;
};

struct lp_infeasible_error : std::runtime_error {
  lp_infeasible_error() : std::runtime_error("linear program is infeasible") {}
};
struct lp_unbounded_error : std::runtime_error {
  lp_unbounded_error() : std::runtime_error("linear program is unbounded") {}
};
struct lp_certificate_error : std::runtime_error {
  explicit lp_certificate_error(double r)
      : std::runtime_error("simplex solution fails the residual check"),
        residual(r) {}
  double residual;
};

/// Two-phase dense simplex. Dantzig pricing with a switch to Bland's rule
/// under degenerate stalling, 1e-9 pivot tolerance. The returned solution is
/// re-checked against the constraints (1e-8) and nonnegativity (1e-10).
LpSolution solve_lp(const LinearProgram &lp);

} // namespace symbell
