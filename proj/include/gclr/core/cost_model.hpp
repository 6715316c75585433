#pragma once

#include <Eigen/Dense>
#include <array>
#include <atomic>
#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gclr/core/dataset.hpp"
#include "gclr/core/entity_set.hpp"
#include "gclr/core/ols.hpp"

namespace gclr::core {

// Pivot ratio below which a predictor column counts as dependent in the
// Gram-based solve (remaining diagonal over original diagonal).
inline constexpr double kGramPivotRatio = 1e-11;

// SSE of the regression whose augmented Gram matrix [X y]'[X y] is given:
// the Schur complement of y after a diagonally pivoted Cholesky elimination
// of the predictor block. Dependent predictors are skipped, so any rank is
// handled.
double gram_sse(const Eigen::MatrixXd& augmented_gram);

// Cluster pricing engine shared by every algorithm. Holds per-entity
// augmented Gram matrices so that c_S costs O(|S| J^2 + J^3) instead of a
// factorization of all stacked rows, and memoizes c_S by member set.
//
// Thread-safe: the cache is a sharded map under reader/writer locks, and a
// value only depends on its key, so concurrent callers see identical results.
class CostModel {
 public:
  explicit CostModel(Dataset dataset, std::size_t cache_capacity = std::size_t{1} << 22);

  CostModel(const CostModel&) = delete;
  CostModel& operator=(const CostModel&) = delete;

  const Dataset& dataset() const noexcept { return dataset_; }
  std::size_t size() const noexcept { return dataset_.size(); }
  int J() const noexcept { return dataset_.J(); }

  const Eigen::MatrixXd& entity_gram(std::size_t i) const { return grams_[i]; }

  // Sum of the member Grams, accumulated in increasing index order.
  Eigen::MatrixXd gram(const EntitySet& S) const;

  double sse(const EntitySet& S) const;
  double sse_uncached(const EntitySet& S) const;

  // Coefficients and SSE from the stacked rows (orthogonal factorization).
  FitResult fit(const EntitySet& S) const;

  double entity_error(std::size_t i, const Eigen::Ref<const Eigen::VectorXd>& beta) const;

  // Sum of y^2 over all observations; the natural scale of every SSE.
  double total_sum_squares() const noexcept { return total_ss_; }

  std::size_t cache_size() const noexcept { return cached_.load(std::memory_order_relaxed); }
  std::size_t cache_hits() const noexcept { return hits_.load(std::memory_order_relaxed); }

 private:
  static constexpr std::size_t kShards = 64;
  // Up to this many entities every subset gets a slot in a flat table
  // indexed by its bit pattern, instead of the hashed map.
  static constexpr std::size_t kDenseTableMaxEntities = 22;
  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<EntitySet, double, EntitySetHash> values;
  };

  Dataset dataset_;
  std::vector<Eigen::MatrixXd> grams_;
  // Nonzeros of each lower triangle as (column-major offset, value).
  std::vector<std::vector<std::pair<Eigen::Index, double>>> sparse_lower_;
  double total_ss_ = 0.0;
  std::size_t capacity_;
  mutable std::unique_ptr<std::array<Shard, kShards>> shards_;
  mutable std::vector<std::atomic<double>> dense_;  // NaN = not computed
  mutable std::atomic<std::size_t> cached_{0};
  mutable std::atomic<std::size_t> hits_{0};
};

}  // namespace gclr::core
