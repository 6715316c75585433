#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "gclr/core/run_control.hpp"
#include "gclr/exact/units.hpp"

namespace gclr::exact {

struct PricingResult {
  EntitySet members;  // over units
  double sse = 0.0;
  double reduced_cost = 0.0;  // sse - upsilon - sum of pi over members
  Eigen::VectorXd beta;
  std::size_t nodes_explored = 0;
  bool proven = true;  // false when a deadline cut the search short
};

struct PricingOptions {
  // Sets evaluated before the search to seed the incumbent; the best one is
  // also extended by every single unit.
  std::vector<EntitySet> warm_sets;
  // Tighter but costlier node bound from the Gram of the fixed-in part (see
  // pricing.cpp), applied while at least gram_bound_min_undecided units are
  // undecided. Off by default: with cached costs the basic bound is faster.
  bool gram_bound = false;
  std::size_t gram_bound_min_undecided = 8;
  std::size_t restart_interval = 100000;
  const core::RunControl* control = nullptr;
};

// Exact minimizer of c_S - sum_{i in S} pi_i over unit sets of weight >= n,
// by depth-first branch and bound. Ties go to the lexicographically smallest
// member set.
PricingResult solve_pricing_bnb(const UnitProblem& problem, const Eigen::VectorXd& pi,
                                double upsilon, const PricingOptions& options = {});

// Same optimum by enumerating every subset; refuses above max_units.
PricingResult pricing_enumerate(const UnitProblem& problem, const Eigen::VectorXd& pi,
                                double upsilon, std::size_t max_units = 20);
PricingResult pricing_enumerate_serial(const UnitProblem& problem, const Eigen::VectorXd& pi,
                                       double upsilon, std::size_t max_units = 20);

// Pricing objective tolerance used for pruning: a small multiple of the
// data's total sum of squares, well above rounding in the bounds.
double pricing_tolerance(const UnitProblem& problem);

}  // namespace gclr::exact
