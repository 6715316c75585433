#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gclr/core/cost_model.hpp"
#include "gclr/core/entity_set.hpp"

namespace gclr::core {

// errors(i, k) = sum of squared residuals of entity i under column k of
// betas (J x K). The parallel and serial versions are value-identical: each
// entry is computed by the same sequence of operations.
Eigen::MatrixXd entity_error_matrix(const Dataset& dataset, const Eigen::MatrixXd& betas);
Eigen::MatrixXd entity_error_matrix_serial(const Dataset& dataset, const Eigen::MatrixXd& betas);

// Cluster costs of many sets at once (cache-aware, OpenMP over sets).
std::vector<double> batch_sse(const CostModel& costs, const std::vector<EntitySet>& sets);
std::vector<double> batch_sse_serial(const CostModel& costs, const std::vector<EntitySet>& sets);

// Argmin over each row, ties to the smallest column.
std::vector<int> row_argmin(const Eigen::MatrixXd& errors);

}  // namespace gclr::core
