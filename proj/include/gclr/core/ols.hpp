#pragma once

#include <Eigen/Dense>

#include "gclr/core/dataset.hpp"
#include "gclr/core/entity_set.hpp"

namespace gclr::core {

struct FitResult {
  Eigen::VectorXd beta;
  double sse = 0.0;
  Eigen::Index rank = 0;
};

// Relative pivot threshold of the rank decision in fit_ols.
inline constexpr double kRankThreshold = 1e-10;

// Least squares by complete orthogonal decomposition (column-pivoted QR
// followed by a right-side orthogonal reduction). Rank-deficient designs get
// the minimum-norm solution.
FitResult fit_ols(const Eigen::Ref<const Eigen::MatrixXd>& X,
                  const Eigen::Ref<const Eigen::VectorXd>& y);

// Stacks the rows of every entity in S and fits them jointly; sse is c_S.
FitResult cluster_cost(const Dataset& dataset, const EntitySet& S);

// Sum of squared residuals of one entity under a given coefficient vector.
double entity_error(const Entity& entity, const Eigen::Ref<const Eigen::VectorXd>& beta);

}  // namespace gclr::core
