#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "gclr/core/cost_model.hpp"
#include "gclr/core/partition.hpp"
#include "gclr/core/run_control.hpp"

namespace gclr::harness {

// Names accepted by run_algorithm.
const std::vector<std::string>& algorithm_names();

struct AlgorithmOutcome {
  core::Partition partition;
  double sse = 0.0;
  bool converged = true;
  nlohmann::ordered_json details;  // algorithm-specific summary
};

// Runs one algorithm by name. params may hold: pop_size, mutation_prob,
// max_stall, literal_replacement (ga-lloyd), groups (cg-heur), discount_col
// (two-stage), xi0, k_max (cg variants). Throws ContractError on an unknown
// name or parameter.
AlgorithmOutcome run_algorithm(const std::string& name, const core::CostModel& costs,
                               const nlohmann::json& params, std::uint64_t seed,
                               core::RunControl& control);

// Entity id -> cluster index.
nlohmann::ordered_json partition_json(const core::Dataset& dataset, const core::Partition& p);

}  // namespace gclr::harness
