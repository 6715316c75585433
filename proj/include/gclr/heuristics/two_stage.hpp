#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gclr/core/dataset.hpp"
#include "gclr/core/partition.hpp"

namespace gclr::heuristics {

inline constexpr int kWeeksPerYear = 52;

// Residuals of y on the discount predictor alone (regression through the
// origin), averaged by week of year ((week - 1) mod 52) + 1. Weeks without
// observations get the entity's overall mean residual.
Eigen::VectorXd seasonal_residual_vector(const core::Entity& entity, int discount_column);

// 1 - Pearson correlation; throws ContractError if either vector is constant.
double correlation_distance(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

struct LinkageResult {
  core::Partition partition;  // clusters numbered by their smallest member
  std::vector<double> heights;  // merge distances in merge order
};

// Agglomerative clustering with complete linkage (maximum pairwise
// distance), merging the closest pair until K clusters remain. Ties go to
// the pair with the smallest indices.
LinkageResult complete_linkage_cluster(const Eigen::MatrixXd& distances, int K);

struct TwoStageResult {
  core::Partition partition;
  double sse = 0.0;
  std::vector<std::size_t> excluded;  // entities with a constant residual vector
};

// Stage 1 clusters the seasonal residual vectors; excluded entities join
// the cluster whose fit suits them best; min-size repair; Stage 2 fits the
// full regression per cluster.
TwoStageResult run_two_stage(const core::Dataset& dataset, int discount_column = 0);

}  // namespace gclr::heuristics
