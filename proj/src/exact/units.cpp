#include "gclr/exact/units.hpp"

#include "gclr/core/errors.hpp"

namespace gclr::exact {

UnitProblem::UnitProblem(const core::CostModel& costs)
    : costs_(&costs), K_(costs.dataset().K()), n_(costs.dataset().n()), singletons_(true) {
  const auto I = costs.size();
  units_.reserve(I);
  for (std::size_t i = 0; i < I; ++i) {
    units_.push_back(EntitySet::of(I, {i}));
    weights_.push_back(1);
    grams_.push_back(costs.entity_gram(i));
  }
}

UnitProblem::UnitProblem(const core::CostModel& costs, std::vector<EntitySet> units)
    : costs_(&costs), units_(std::move(units)), K_(costs.dataset().K()), n_(costs.dataset().n()) {
  const auto I = costs.size();
  EntitySet seen(I);
  for (const auto& u : units_) {
    if (u.universe() != I) throw ContractError("unit universe does not match dataset");
    if (u.empty()) throw ContractError("empty unit");
    if (seen.intersects(u)) throw ContractError("units overlap");
    seen |= u;
    weights_.push_back(static_cast<int>(u.size()));
    grams_.push_back(costs.gram(u));
  }
  if (seen.size() != I) throw ContractError("units do not cover every entity");
  singletons_ = units_.size() == I;
  for (std::size_t r = 0; singletons_ && r < I; ++r) singletons_ = units_[r].contains(r);
}

int UnitProblem::weight(const EntitySet& unit_set) const {
  if (singletons_) return static_cast<int>(unit_set.size());
  int w = 0;
  unit_set.for_each([&](std::size_t r) { w += weights_[r]; });
  return w;
}

EntitySet UnitProblem::expand(const EntitySet& unit_set) const {
  if (singletons_) return unit_set;
  EntitySet out(costs_->size());
  unit_set.for_each([&](std::size_t r) { out |= units_[r]; });
  return out;
}

core::Partition UnitProblem::to_partition(const std::vector<EntitySet>& clusters) const {
  std::vector<EntitySet> expanded;
  expanded.reserve(clusters.size());
  for (const auto& c : clusters) expanded.push_back(expand(c));
  return core::Partition::from_clusters(costs_->size(), expanded);
}

}  // namespace gclr::exact
