#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "gclr/core/cost_model.hpp"
#include "gclr/core/partition.hpp"
#include "gclr/core/run_control.hpp"
#include "gclr/exact/master.hpp"
#include "gclr/exact/units.hpp"

namespace gclr::exact {

struct CgOptions {
  bool stabilized = true;
  double xi0 = 1.0;
  int k_max = 5000;
  bool gram_bound = false;
  core::RunControl* control = nullptr;
};

struct CgIteration {
  double master_objective = 0.0;
  double reduced_cost = 0.0;
  double xi_max = 0.0;
  bool column_added = false;
  std::size_t pricing_nodes = 0;
};

struct CgResult {
  core::Partition partition;
  std::vector<EntitySet> clusters;  // over units
  double objective = 0.0;
  double lp_objective = 0.0;
  int iterations = 0;
  bool integral = false;
  bool converged = false;
  double wall_time_ms = 0.0;
  std::size_t pool_size = 0;
  double cost_scale = 1.0;
  Eigen::VectorXd pi;  // final duals
  double upsilon = 0.0;
  std::vector<CgIteration> history;
};

// Threshold below which a column's reduced cost counts as negative, relative
// to the master's cost scale.
inline constexpr double kReducedCostTol = 1e-9;

// Column generation on a unit problem from the given initial clusters (K
// disjoint unit sets covering every unit, each of weight >= n).
CgResult run_cg(const UnitProblem& problem, const std::vector<EntitySet>& initial,
                const CgOptions& options = {});

// Entity-level entry points: random repaired initial partition from seed.
CgResult run_cg(const core::CostModel& costs, std::uint64_t seed, CgOptions options = {});
CgResult run_cg_plain(const core::CostModel& costs, std::uint64_t seed, CgOptions options = {});

}  // namespace gclr::exact
