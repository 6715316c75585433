#pragma once

#include <cstddef>
#include <vector>

#include "gclr/core/partition.hpp"
#include "gclr/exact/units.hpp"

namespace gclr::exact {

struct BruteForceResult {
  core::Partition partition;        // over entities
  std::vector<EntitySet> clusters;  // over units
  double sse = 0.0;
  std::size_t evaluated = 0;  // feasible partitions visited
};

// Number of ways to split m items into k nonempty unlabeled blocks.
double stirling2(std::size_t m, std::size_t k);

// Global optimum by enumerating every split of the units into K unlabeled
// clusters of weight >= n (restricted growth strings). Ties keep the first
// partition in enumeration order. Refuses when S(units, K) > max_partitions.
BruteForceResult brute_force_optimum(const UnitProblem& problem, double max_partitions = 1e7);
BruteForceResult brute_force_optimum_serial(const UnitProblem& problem,
                                            double max_partitions = 1e7);

}  // namespace gclr::exact
