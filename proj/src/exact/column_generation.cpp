#include "gclr/exact/column_generation.hpp"

#include <chrono>
#include <cmath>
#include <unordered_set>

#include "gclr/core/errors.hpp"
#include "gclr/exact/integerize.hpp"
#include "gclr/exact/pricing.hpp"
#include "gclr/heuristics/initial.hpp"

namespace gclr::exact {

namespace {

constexpr double kIntegralTol = 1e-6;

void check_initial(const UnitProblem& problem, const std::vector<EntitySet>& initial) {
  if (static_cast<int>(initial.size()) != problem.K())
    throw ContractError("run_cg: need exactly K initial clusters");
  EntitySet seen(problem.size());
  for (const auto& c : initial) {
    if (c.universe() != problem.size() || c.intersects(seen))
      throw ContractError("run_cg: initial clusters must be disjoint unit sets");
    if (problem.weight(c) < problem.n())
      throw ContractError("run_cg: initial cluster below the minimum size");
    seen |= c;
  }
  if (seen.size() != problem.size()) throw ContractError("run_cg: initial clusters miss a unit");
}

}  // namespace

CgResult run_cg(const UnitProblem& problem, const std::vector<EntitySet>& initial,
                const CgOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  check_initial(problem, initial);
  const auto R = problem.size();
  const int K = problem.K();

  std::vector<Column> pool;
  std::unordered_set<EntitySet, core::EntitySetHash> in_pool;
  double init_cost = 0.0;
  for (const auto& c : initial) {
    pool.push_back({c, problem.cost(c)});
    in_pool.insert(c);
    init_cost += pool.back().cost;
  }
  if (options.control) options.control->improved(init_cost);

  CgResult res;
  res.cost_scale = init_cost > 0.0 ? init_cost / K : 1.0;
  auto stab = options.stabilized ? StabilizationState::initial(R, options.xi0, options.k_max)
                                 : StabilizationState::none(R, options.k_max);

  MasterSolution ms;
  std::vector<int> basis;
  bool have_master = false;
  while (res.iterations < options.k_max) {
    if (options.control && options.control->expired()) break;
    ms = solve_restricted_master(pool, R, K, stab, res.cost_scale, basis);
    basis = ms.basis;
    have_master = true;
    ++res.iterations;
    stab.iteration = res.iterations;

    PricingOptions po;
    po.gram_bound = options.gram_bound;
    po.control = options.control;
    po.warm_sets.reserve(pool.size());
    for (const auto& c : pool) po.warm_sets.push_back(c.members);
    const auto pr = solve_pricing_bnb(problem, ms.pi, ms.upsilon, po);

    CgIteration it;
    it.master_objective = ms.objective;
    it.reduced_cost = pr.reduced_cost;
    it.xi_max = stab.xi.size() ? stab.xi.maxCoeff() : 0.0;
    it.pricing_nodes = pr.nodes_explored;
    if (!pr.proven) {
      res.history.push_back(it);
      break;
    }

    const bool negative = pr.reduced_cost / res.cost_scale < -kReducedCostTol;
    if (negative && !in_pool.count(pr.members)) {
      pool.push_back({pr.members, pr.sse});
      in_pool.insert(pr.members);
      it.column_added = true;
      res.history.push_back(it);
      continue;
    }
    res.history.push_back(it);
    const double q = std::max(ms.q_minus.size() ? ms.q_minus.maxCoeff() : 0.0,
                              ms.q_plus.size() ? ms.q_plus.maxCoeff() : 0.0);
    if (q <= 1e-9 || !stab.active()) {
      res.converged = true;
      break;
    }
    stab = update_stabilization(stab, ms.pi);
  }

  res.pool_size = pool.size();
  if (have_master) {
    res.lp_objective = ms.objective;
    res.pi = ms.pi;
    res.upsilon = ms.upsilon;
  }

  // Extract an integral partition: directly when the LP solution is 0/1,
  // otherwise by the exact pool solve.
  std::vector<std::size_t> chosen;
  bool lp_integral = have_master && res.converged;
  if (lp_integral) {
    for (Eigen::Index s = 0; s < ms.z.size(); ++s) {
      const double z = ms.z[s];
      if (std::abs(z - 1.0) <= kIntegralTol)
        chosen.push_back(static_cast<std::size_t>(s));
      else if (std::abs(z) > kIntegralTol)
        lp_integral = false;
    }
    if (static_cast<int>(chosen.size()) != K) lp_integral = false;
  }
  if (!lp_integral) {
    try {
      chosen = integerize(pool, R, K);
    } catch (const InfeasibleError&) {
      chosen.clear();
      for (std::size_t s = 0; s < static_cast<std::size_t>(K); ++s) chosen.push_back(s);
    }
  }
  for (const auto s : chosen) {
    res.clusters.push_back(pool[s].members);
    res.objective += pool[s].cost;
  }
  res.partition = problem.to_partition(res.clusters);
  if (!have_master) res.lp_objective = res.objective;
  res.integral = res.converged &&
                 (lp_integral || std::abs(res.objective - res.lp_objective) <=
                                     kIntegralTol * std::max(1.0, std::abs(res.lp_objective)));
  if (options.control) options.control->improved(res.objective);
  res.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

CgResult run_cg(const core::CostModel& costs, std::uint64_t seed, CgOptions options) {
  const UnitProblem problem(costs);
  const auto p = heuristics::random_partition(costs.dataset(), seed);
  return run_cg(problem, p.clusters(), options);
}

CgResult run_cg_plain(const core::CostModel& costs, std::uint64_t seed, CgOptions options) {
  options.stabilized = false;
  return run_cg(costs, seed, options);
}

}  // namespace gclr::exact
