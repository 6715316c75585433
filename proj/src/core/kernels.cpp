#include "gclr/core/kernels.hpp"

#include "gclr/core/errors.hpp"

namespace gclr::core {

namespace {

void check_betas(const Dataset& dataset, const Eigen::MatrixXd& betas) {
  if (betas.rows() != dataset.J())
    throw ContractError("coefficient matrix has " + std::to_string(betas.rows()) +
                        " rows, expected J = " + std::to_string(dataset.J()));
}

double error_of(const Entity& e, const Eigen::MatrixXd& betas, Eigen::Index k) {
  return (e.y - e.X * betas.col(k)).squaredNorm();
}

}  // namespace

Eigen::MatrixXd entity_error_matrix(const Dataset& dataset, const Eigen::MatrixXd& betas) {
  check_betas(dataset, betas);
  const auto I = static_cast<std::ptrdiff_t>(dataset.size());
  Eigen::MatrixXd out(I, betas.cols());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < I; ++i)
    for (Eigen::Index k = 0; k < betas.cols(); ++k)
      out(i, k) = error_of(dataset.entity(static_cast<std::size_t>(i)), betas, k);
  return out;
}

Eigen::MatrixXd entity_error_matrix_serial(const Dataset& dataset, const Eigen::MatrixXd& betas) {
  check_betas(dataset, betas);
  const auto I = static_cast<Eigen::Index>(dataset.size());
  Eigen::MatrixXd out(I, betas.cols());
  for (Eigen::Index i = 0; i < I; ++i)
    for (Eigen::Index k = 0; k < betas.cols(); ++k)
      out(i, k) = error_of(dataset.entity(static_cast<std::size_t>(i)), betas, k);
  return out;
}

std::vector<double> batch_sse(const CostModel& costs, const std::vector<EntitySet>& sets) {
  std::vector<double> out(sets.size());
  const auto m = static_cast<std::ptrdiff_t>(sets.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t s = 0; s < m; ++s) out[s] = costs.sse(sets[s]);
  return out;
}

std::vector<double> batch_sse_serial(const CostModel& costs, const std::vector<EntitySet>& sets) {
  std::vector<double> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(costs.sse_uncached(s));
  return out;
}

std::vector<int> row_argmin(const Eigen::MatrixXd& errors) {
  std::vector<int> out(static_cast<std::size_t>(errors.rows()), 0);
  for (Eigen::Index i = 0; i < errors.rows(); ++i) {
    Eigen::Index best = 0;
    for (Eigen::Index k = 1; k < errors.cols(); ++k)
      if (errors(i, k) < errors(i, best)) best = k;
    out[i] = static_cast<int>(best);
  }
  return out;
}

}  // namespace gclr::core
