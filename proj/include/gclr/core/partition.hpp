#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gclr/core/cost_model.hpp"
#include "gclr/core/dataset.hpp"
#include "gclr/core/entity_set.hpp"

namespace gclr::core {

// Assignment of entity indices to clusters 0..K-1. kUnassigned marks an
// entity without a cluster (only ever seen in invalid partitions).
class Partition {
 public:
  static constexpr int kUnassigned = -1;

  Partition() = default;
  Partition(int K, std::vector<int> labels);
  static Partition from_clusters(std::size_t I, const std::vector<EntitySet>& clusters);

  int K() const noexcept { return K_; }
  std::size_t size() const noexcept { return labels_.size(); }
  int operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  void assign(std::size_t i, int k) { labels_[i] = k; }

  EntitySet members(int k) const;
  std::vector<EntitySet> clusters() const;
  std::vector<std::size_t> sizes() const;

  // Labels renumbered by first appearance, so that partitions equal up to a
  // permutation of cluster labels compare equal.
  Partition canonical() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int K_ = 0;
  std::vector<int> labels_;
};

struct Violation {
  enum class Kind { Completeness, MinSize, BadLabel };
  Kind kind;
  std::string message;
};

// Empty iff every entity sits in exactly one cluster of [K] and every cluster
// holds at least n entities.
std::vector<Violation> validate_partition(const Partition& p, const Dataset& dataset);

// Sum of the cluster costs. Throws ContractError naming the first violated
// constraint when p is not a valid partition of the dataset.
double partition_sse(const CostModel& costs, const Partition& p);

// Reference route: every cluster fitted on its stacked rows.
double partition_sse(const Dataset& dataset, const Partition& p);

}  // namespace gclr::core
