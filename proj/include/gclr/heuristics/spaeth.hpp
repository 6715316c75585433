#pragma once

#include <cstdint>
#include <vector>

#include "gclr/core/cost_model.hpp"
#include "gclr/core/partition.hpp"
#include "gclr/core/run_control.hpp"

namespace gclr::heuristics {

struct SpaethResult {
  core::Partition partition;
  double sse = 0.0;
  std::size_t moves = 0;
  std::size_t visits = 0;
  bool converged = false;
  std::vector<double> sse_after_move;  // total SSE after each executed move
};

// Exchange heuristic: visit entities cyclically; move an entity out of a
// cluster with more than n members into the cluster that lowers the total
// SSE most, if that is a strict decrease. Stops after I consecutive visits
// without a move.
SpaethResult run_spaeth(const core::CostModel& costs, std::uint64_t seed,
                        core::RunControl* control = nullptr);
SpaethResult run_spaeth_from(const core::CostModel& costs, core::Partition start,
                             core::RunControl* control = nullptr);

}  // namespace gclr::heuristics
