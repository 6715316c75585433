#include "gclr/core/ols.hpp"

#include "gclr/core/errors.hpp"

namespace gclr::core {

FitResult fit_ols(const Eigen::Ref<const Eigen::MatrixXd>& X,
                  const Eigen::Ref<const Eigen::VectorXd>& y) {
  if (X.rows() != y.size())
    throw ContractError("fit_ols: X has " + std::to_string(X.rows()) + " rows but y has " +
                        std::to_string(y.size()));
  if (X.rows() < 1) throw ContractError("fit_ols: no observations");

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
  cod.setThreshold(kRankThreshold);
  cod.compute(X);

  FitResult fit;
  fit.beta = cod.solve(y);
  fit.rank = cod.rank();
  fit.sse = (y - X * fit.beta).squaredNorm();
  return fit;
}

FitResult cluster_cost(const Dataset& dataset, const EntitySet& S) {
  if (S.empty()) throw ContractError("cluster_cost: empty cluster");
  Eigen::Index rows = 0;
  S.for_each([&](std::size_t i) { rows += dataset.entity(i).X.rows(); });

  Eigen::MatrixXd X(rows, dataset.J());
  Eigen::VectorXd y(rows);
  Eigen::Index at = 0;
  S.for_each([&](std::size_t i) {
    const auto& e = dataset.entity(i);
    X.middleRows(at, e.X.rows()) = e.X;
    y.segment(at, e.y.size()) = e.y;
    at += e.X.rows();
  });
  return fit_ols(X, y);
}

double entity_error(const Entity& entity, const Eigen::Ref<const Eigen::VectorXd>& beta) {
  return (entity.y - entity.X * beta).squaredNorm();
}

}  // namespace gclr::core
