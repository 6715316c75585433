#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gclr/exact/simplex.hpp"
#include "gclr/exact/units.hpp"

namespace gclr::exact {

// Box-step stabilization of the assignment rows: perturbation variables
// q-/q+ priced at delta and capped at xi.
struct StabilizationState {
  Eigen::VectorXd delta;
  Eigen::VectorXd xi;
  int iteration = 0;
  int k_max = 5000;

  static StabilizationState initial(std::size_t rows, double xi0 = 1.0, int k_max = 5000);
  // xi = 0: the plain master.
  static StabilizationState none(std::size_t rows, int k_max = 5000);
  bool active() const { return xi.size() > 0 && xi.maxCoeff() > 0.0; }
};

inline constexpr double kXiSnap = 1e-6;

// Recenters delta at the current duals and shrinks xi tenfold; components
// below kXiSnap become exactly zero.
StabilizationState update_stabilization(const StabilizationState& stab, const Eigen::VectorXd& pi);

struct MasterSolution {
  Eigen::VectorXd z;  // one entry per pool column
  Eigen::VectorXd q_minus;
  Eigen::VectorXd q_plus;
  Eigen::VectorXd pi;  // duals of the assignment rows
  double upsilon = 0.0;  // dual of the cardinality row
  double objective = 0.0;
  double dual_objective = 0.0;
  std::vector<int> basis;  // for warm starts
  int lp_iterations = 0;
};

// min sum c_S z_S - delta'q- + delta'q+
//   s.t. sum_S z_S = K;  sum_S a_iS z_S - q-_i + q+_i = 1;  0 <= q <= xi;  z >= 0.
// Costs enter the LP divided by cost_scale; every reported value is in the
// original units. warm_basis comes from a previous solve over a prefix of
// the same pool.
MasterSolution solve_restricted_master(const std::vector<Column>& columns, std::size_t rows,
                                       int K, const StabilizationState& stab,
                                       double cost_scale = 1.0,
                                       const std::vector<int>& warm_basis = {});

}  // namespace gclr::exact
