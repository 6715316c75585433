#pragma once

#include <cstdint>
#include <vector>

#include "gclr/core/cost_model.hpp"
#include "gclr/core/entity_set.hpp"
#include "gclr/core/partition.hpp"
#include "gclr/core/random.hpp"
#include "gclr/exact/column_generation.hpp"

namespace gclr::heuristics {

struct GroupSet {
  std::vector<core::EntitySet> groups;
  std::vector<double> sse_history;  // total within-group SSE after each round
  int rounds = 0;

  std::size_t R() const noexcept { return groups.size(); }
};

// Lloyd iteration over R groups without a size constraint: fit each group,
// move every entity to the group whose coefficients fit it best (ties keep
// the current group), until nothing changes. Empty groups are dropped.
GroupSet group_phase(const core::Dataset& dataset, int R, core::Rng& rng, int max_rounds = 1000);
GroupSet group_phase(const core::Dataset& dataset, int R, std::uint64_t seed, int max_rounds = 1000);
// Continues from given labels in [0, R).
GroupSet group_phase_from(const core::Dataset& dataset, int R, std::vector<int> labels,
                          int max_rounds = 1000);

struct CgHeuristicResult {
  core::Partition partition;
  double sse = 0.0;
  GroupSet groups;
  exact::CgResult cg;
};

// Group phase, then column generation with the groups as units.
CgHeuristicResult run_cg_heuristic(const core::CostModel& costs, int R, std::uint64_t seed,
                                   exact::CgOptions options = {});

}  // namespace gclr::heuristics
