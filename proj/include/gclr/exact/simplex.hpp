#pragma once

#include <Eigen/Dense>
#include <vector>

namespace gclr::exact {

// minimize c'x  subject to  A x = b,  lower <= x <= upper.
// Lower bounds must be finite; upper bounds may be +infinity.
struct LpProblem {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpOptions {
  double optimality_tol = 1e-9;
  double feasibility_tol = 1e-9;
  double pivot_tol = 1e-9;
  int refactor_interval = 64;
  int degenerate_before_bland = 30;
  int max_iterations = 0;  // 0 = automatic
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Eigen::VectorXd x;        // structural values
  Eigen::VectorXd y;        // row duals
  Eigen::VectorXd reduced;  // c_j - y'A_j
  double objective = 0.0;
  double dual_objective = 0.0;  // y'b + sum_j reduced_j x_j over nonbasic j
  std::vector<int> basis;       // structural column per row; -1 for an artificial
  int iterations = 0;
  bool warm_started = false;
};

// Bounded-variable revised primal simplex with an explicit dense basis
// inverse. Dantzig pricing, switching to Bland's rule after a run of
// degenerate pivots. A previous basis (same rows, columns may have been
// appended) is reused when it is still primal feasible.
LpSolution solve_lp(const LpProblem& lp, const std::vector<int>& warm_basis = {},
                    const LpOptions& options = {});

}  // namespace gclr::exact
