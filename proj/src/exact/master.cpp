#include "gclr/exact/master.hpp"

#include <limits>

#include "gclr/core/errors.hpp"

namespace gclr::exact {

StabilizationState StabilizationState::initial(std::size_t rows, double xi0, int k_max) {
  StabilizationState s;
  s.delta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rows));
  s.xi = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(rows), xi0);
  s.k_max = k_max;
  return s;
}

StabilizationState StabilizationState::none(std::size_t rows, int k_max) {
  return initial(rows, 0.0, k_max);
}

StabilizationState update_stabilization(const StabilizationState& stab, const Eigen::VectorXd& pi) {
  if (pi.size() != stab.xi.size())
    throw ContractError("update_stabilization: dual vector has the wrong length");
  StabilizationState next = stab;
  next.delta = pi;
  for (Eigen::Index i = 0; i < next.xi.size(); ++i) {
    next.xi[i] /= 10.0;
    if (next.xi[i] < kXiSnap) next.xi[i] = 0.0;
  }
  return next;
}

MasterSolution solve_restricted_master(const std::vector<Column>& columns, std::size_t rows,
                                       int K, const StabilizationState& stab, double cost_scale,
                                       const std::vector<int>& warm_basis) {
  const auto R = static_cast<Eigen::Index>(rows);
  const auto P = static_cast<Eigen::Index>(columns.size());
  if (stab.delta.size() != R || stab.xi.size() != R)
    throw ContractError("solve_restricted_master: stabilization has the wrong length");
  if (!(cost_scale > 0.0)) throw ContractError("solve_restricted_master: cost_scale <= 0");

  // Variables: q- (0..R-1), q+ (R..2R-1), then the pool, so appending
  // columns keeps earlier indices (and warm bases) valid.
  LpProblem lp;
  const auto N = 2 * R + P;
  lp.A = Eigen::MatrixXd::Zero(R + 1, N);
  lp.b = Eigen::VectorXd::Ones(R + 1);
  lp.b[0] = K;
  lp.c.resize(N);
  lp.lower = Eigen::VectorXd::Zero(N);
  lp.upper.resize(N);
  for (Eigen::Index i = 0; i < R; ++i) {
    lp.A(i + 1, i) = -1.0;
    lp.A(i + 1, R + i) = 1.0;
    lp.c[i] = -stab.delta[i] / cost_scale;
    lp.c[R + i] = stab.delta[i] / cost_scale;
    lp.upper[i] = lp.upper[R + i] = stab.xi[i];
  }
  for (Eigen::Index s = 0; s < P; ++s) {
    const auto j = 2 * R + s;
    const auto& col = columns[s];
    if (col.members.universe() != rows)
      throw ContractError("solve_restricted_master: column universe mismatch");
    lp.A(0, j) = 1.0;
    col.members.for_each([&](std::size_t i) { lp.A(static_cast<Eigen::Index>(i) + 1, j) = 1.0; });
    lp.c[j] = col.cost / cost_scale;
    lp.upper[j] = std::numeric_limits<double>::infinity();
  }

  const auto sol = solve_lp(lp, warm_basis);
  if (sol.status == LpStatus::Infeasible)
    throw InfeasibleError("restricted master is infeasible: the pool cannot cover every row");
  if (sol.status != LpStatus::Optimal)
    throw SolverError(std::string("restricted master: simplex stopped with status ") +
                            (sol.status == LpStatus::Unbounded ? "unbounded" : "iteration limit") +
                            " after " + std::to_string(sol.iterations) + " pivots");

  MasterSolution m;
  m.q_minus = sol.x.head(R);
  m.q_plus = sol.x.segment(R, R);
  m.z = sol.x.tail(P);
  m.upsilon = sol.y[0] * cost_scale;
  m.pi = sol.y.tail(R) * cost_scale;
  m.objective = sol.objective * cost_scale;
  m.dual_objective = sol.dual_objective * cost_scale;
  m.basis = sol.basis;
  m.lp_iterations = sol.iterations;
  return m;
}

}  // namespace gclr::exact
