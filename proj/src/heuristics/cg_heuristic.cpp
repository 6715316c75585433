#include "gclr/heuristics/cg_heuristic.hpp"

#include <algorithm>
#include <numeric>

#include "gclr/core/errors.hpp"
#include "gclr/core/kernels.hpp"
#include "gclr/core/ols.hpp"
#include "gclr/exact/units.hpp"
#include "gclr/heuristics/initial.hpp"

namespace gclr::heuristics {

GroupSet group_phase_from(const core::Dataset& dataset, int R, std::vector<int> labels,
                          int max_rounds) {
  const auto I = dataset.size();
  if (R < 1) throw ContractError("group_phase: R must be positive");
  if (labels.size() != I) throw ContractError("group_phase: label count mismatch");
  const int J = dataset.J();

  GroupSet gs;
  Eigen::MatrixXd betas(J, R);
  std::vector<bool> alive(static_cast<std::size_t>(R));
  while (gs.rounds < max_rounds) {
    const core::Partition p(R, labels);
    const auto members = p.clusters();
    double sse = 0.0;
    for (int r = 0; r < R; ++r) {
      alive[r] = !members[r].empty();
      if (!alive[r]) continue;
      const auto fit = core::cluster_cost(dataset, members[r]);
      betas.col(r) = fit.beta;
      sse += fit.sse;
    }
    gs.sse_history.push_back(sse);

    const auto errors = core::entity_error_matrix(dataset, betas);
    bool changed = false;
    for (std::size_t i = 0; i < I; ++i) {
      int best = labels[i];
      for (int r = 0; r < R; ++r)
        if (alive[r] && errors(static_cast<Eigen::Index>(i), r) <
                            errors(static_cast<Eigen::Index>(i), best))
          best = r;
      if (best != labels[i]) {
        labels[i] = best;
        changed = true;
      }
    }
    ++gs.rounds;
    if (!changed) break;
  }
  for (const auto& g : core::Partition(R, labels).clusters())
    if (!g.empty()) gs.groups.push_back(g);
  return gs;
}

GroupSet group_phase(const core::Dataset& dataset, int R, core::Rng& rng, int max_rounds) {
  return group_phase_from(dataset, R, random_labels(dataset.size(), R, rng), max_rounds);
}

GroupSet group_phase(const core::Dataset& dataset, int R, std::uint64_t seed, int max_rounds) {
  auto rng = core::make_rng(seed);
  return group_phase(dataset, R, rng, max_rounds);
}

namespace {

// Random unit labels, then greedy moves of the lightest movable unit from
// the heaviest donor until every cluster reaches weight n. Returns false
// when the units cannot be arranged that way.
bool initial_unit_clusters(const exact::UnitProblem& problem, core::Rng& rng,
                           std::vector<core::EntitySet>& out) {
  const int K = problem.K();
  const int n = problem.n();
  const auto R = problem.size();
  if (R < static_cast<std::size_t>(K)) return false;
  auto labels = random_labels(R, K, rng);
  std::vector<int> w(static_cast<std::size_t>(K), 0);
  std::vector<int> cnt(static_cast<std::size_t>(K), 0);
  for (std::size_t r = 0; r < R; ++r) {
    w[labels[r]] += problem.weight(r);
    ++cnt[labels[r]];
  }
  for (std::size_t guard = 0; guard < R * static_cast<std::size_t>(K) + 1; ++guard) {
    int target = -1;
    for (int k = 0; k < K; ++k)
      if ((w[k] < n || cnt[k] == 0) && (target < 0 || w[k] < w[target])) target = k;
    if (target < 0) {
      out.assign(static_cast<std::size_t>(K), core::EntitySet(R));
      for (std::size_t r = 0; r < R; ++r) out[labels[r]].insert(r);
      return true;
    }
    std::size_t pick = R;
    for (std::size_t r = 0; r < R; ++r) {
      const int from = labels[r];
      if (from == target || cnt[from] < 2 || w[from] - problem.weight(r) < n) continue;
      if (pick == R || problem.weight(r) < problem.weight(pick) ||
          (problem.weight(r) == problem.weight(pick) && w[from] > w[labels[pick]]))
        pick = r;
    }
    if (pick == R) return false;
    w[labels[pick]] -= problem.weight(pick);
    --cnt[labels[pick]];
    labels[pick] = target;
    w[target] += problem.weight(pick);
    ++cnt[target];
  }
  return false;
}

// Halves the largest group (members in index order).
void split_largest(std::vector<core::EntitySet>& groups) {
  auto it = std::max_element(groups.begin(), groups.end(),
                             [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const auto members = it->members();
  if (members.size() < 2) throw InfeasibleError("run_cg_heuristic: cannot split singleton groups");
  core::EntitySet second(it->universe());
  for (std::size_t t = members.size() / 2; t < members.size(); ++t) {
    it->erase(members[t]);
    second.insert(members[t]);
  }
  groups.push_back(std::move(second));
}

}  // namespace

CgHeuristicResult run_cg_heuristic(const core::CostModel& costs, int R, std::uint64_t seed,
                                   exact::CgOptions options) {
  const auto& dataset = costs.dataset();
  if (R <= dataset.K()) throw ContractError("run_cg_heuristic: R must exceed K");
  auto rng = core::make_rng(seed);

  CgHeuristicResult res;
  res.groups = group_phase(dataset, R, rng);
  auto groups = res.groups.groups;
  std::vector<core::EntitySet> initial;
  while (true) {
    const exact::UnitProblem probe(costs, groups);
    if (groups.size() > static_cast<std::size_t>(dataset.K()) &&
        initial_unit_clusters(probe, rng, initial))
      break;
    split_largest(groups);
  }
  res.groups.groups = groups;
  const exact::UnitProblem problem(costs, std::move(groups));
  res.cg = exact::run_cg(problem, initial, options);
  res.partition = res.cg.partition;
  res.sse = res.cg.objective;
  return res;
}

}  // namespace gclr::heuristics
