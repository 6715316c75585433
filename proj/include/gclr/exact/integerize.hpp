#pragma once

#include <cstddef>
#include <vector>

#include "gclr/exact/units.hpp"

namespace gclr::exact {

// Exact 0/1 solve of the set-partitioning master restricted to the pool:
// K columns covering every row exactly once at minimum total cost. Depth
// first on the lowest uncovered row, bounded by spreading each column's cost
// over its members. Returns indices into pool. Throws InfeasibleError when
// no exact cover with K columns exists.
std::vector<std::size_t> integerize(const std::vector<Column>& pool, std::size_t rows, int K,
                                    std::size_t node_limit = 50'000'000);

}  // namespace gclr::exact
