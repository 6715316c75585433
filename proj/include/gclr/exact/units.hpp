#pragma once

#include <cstddef>
#include <vector>

#include "gclr/core/cost_model.hpp"
#include "gclr/core/entity_set.hpp"
#include "gclr/core/partition.hpp"

namespace gclr::exact {

using core::EntitySet;

// The exact machinery works on "units": disjoint groups of entities that
// always move together. The entity-level problem uses one unit per entity;
// the CG heuristic uses the groups of its first phase. A set of units is
// feasible as a cluster when its total entity count reaches n.
class UnitProblem {
 public:
  // One unit per entity, with K and n from the dataset.
  explicit UnitProblem(const core::CostModel& costs);
  UnitProblem(const core::CostModel& costs, std::vector<EntitySet> units);

  const core::CostModel& costs() const noexcept { return *costs_; }
  std::size_t size() const noexcept { return units_.size(); }
  int K() const noexcept { return K_; }
  int n() const noexcept { return n_; }
  void set_K(int K) { K_ = K; }

  const EntitySet& unit(std::size_t r) const { return units_[r]; }
  int weight(std::size_t r) const { return weights_[r]; }
  int weight(const EntitySet& unit_set) const;
  const Eigen::MatrixXd& unit_gram(std::size_t r) const { return grams_[r]; }
  bool singleton_units() const noexcept { return singletons_; }

  EntitySet expand(const EntitySet& unit_set) const;
  double cost(const EntitySet& unit_set) const { return costs_->sse(expand(unit_set)); }

  // Entity partition induced by K disjoint unit sets covering every unit.
  core::Partition to_partition(const std::vector<EntitySet>& clusters) const;

 private:
  const core::CostModel* costs_;
  std::vector<EntitySet> units_;
  std::vector<int> weights_;
  std::vector<Eigen::MatrixXd> grams_;
  int K_;
  int n_;
  bool singletons_ = false;
};

// A master column: a feasible cluster expressed over units, with its cost.
struct Column {
  EntitySet members;
  double cost = 0.0;
};

}  // namespace gclr::exact
