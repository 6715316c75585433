#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gclr/core/dataset.hpp"
#include "gclr/core/partition.hpp"
#include "gclr/core/random.hpp"

namespace gclr::heuristics {

using core::make_rng;
using core::Rng;

// Uniform labels in [0, K), no repair.
std::vector<int> random_labels(std::size_t I, int K, Rng& rng);

// Uniform random assignment followed by repair_min_size.
core::Partition random_partition(const core::Dataset& dataset, std::uint64_t seed);
core::Partition random_partition(const core::Dataset& dataset, Rng& rng);

// While some cluster holds fewer than n entities (smallest first, ties by
// lower index): rank the outside entities by their error under their own
// cluster's fitted coefficients and move them in, in that order, skipping
// donors that would drop below n. Clusters that are empty have no fit; their
// members are ranked last (never happens: an entity always has a cluster).
core::Partition repair_min_size(const core::Dataset& dataset, core::Partition p, int n);

}  // namespace gclr::heuristics
