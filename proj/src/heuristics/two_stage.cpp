#include "gclr/heuristics/two_stage.hpp"

#include <cmath>
#include <limits>

#include "gclr/core/errors.hpp"
#include "gclr/core/ols.hpp"
#include "gclr/heuristics/initial.hpp"

namespace gclr::heuristics {

Eigen::VectorXd seasonal_residual_vector(const core::Entity& entity, int discount_column) {
  const auto L = entity.y.size();
  if (L < 2) throw ContractError("seasonal_residual_vector: entity " + entity.id + " has fewer than 2 observations");
  if (discount_column < 0 || discount_column >= entity.X.cols())
    throw ContractError("seasonal_residual_vector: discount column out of range");
  if (static_cast<Eigen::Index>(entity.weeks.size()) != L)
    throw ContractError("seasonal_residual_vector: entity " + entity.id + " lacks week labels");

  const auto d = entity.X.col(discount_column);
  const double dd = d.squaredNorm();
  const double beta = dd > 0.0 ? d.dot(entity.y) / dd : 0.0;
  const Eigen::VectorXd r = entity.y - beta * d;

  Eigen::VectorXd sum = Eigen::VectorXd::Zero(kWeeksPerYear);
  Eigen::VectorXi count = Eigen::VectorXi::Zero(kWeeksPerYear);
  for (Eigen::Index l = 0; l < L; ++l) {
    const int w = entity.weeks[l];
    if (w < 1) throw ContractError("seasonal_residual_vector: week labels must be positive");
    const int slot = (w - 1) % kWeeksPerYear;
    sum[slot] += r[l];
    ++count[slot];
  }
  const double mean = r.mean();
  Eigen::VectorXd out(kWeeksPerYear);
  for (int s = 0; s < kWeeksPerYear; ++s) out[s] = count[s] ? sum[s] / count[s] : mean;
  return out;
}

double correlation_distance(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  if (u.size() != v.size() || u.size() < 2)
    throw ContractError("correlation_distance: vectors must have equal length >= 2");
  const Eigen::VectorXd cu = u.array() - u.mean();
  const Eigen::VectorXd cv = v.array() - v.mean();
  const double nu = cu.norm();
  const double nv = cv.norm();
  if (!(nu > 0.0) || !(nv > 0.0)) throw ContractError("correlation_distance: zero variance");
  const double rho = std::clamp(cu.dot(cv) / (nu * nv), -1.0, 1.0);
  return 1.0 - rho;
}

LinkageResult complete_linkage_cluster(const Eigen::MatrixXd& distances, int K) {
  const auto m = distances.rows();
  if (distances.cols() != m) throw ContractError("complete_linkage_cluster: matrix not square");
  if (K < 1 || K > m)
    throw ContractError("complete_linkage_cluster: K = " + std::to_string(K) + " with " +
                        std::to_string(m) + " items");
  // Active clusters stay sorted by smallest member, so scanning pairs in
  // order breaks ties toward the smallest indices.
  std::vector<std::vector<Eigen::Index>> clusters;
  for (Eigen::Index i = 0; i < m; ++i) clusters.push_back({i});
  Eigen::MatrixXd D = distances;  // D(a, b) between current clusters a, b

  LinkageResult res;
  while (static_cast<int>(clusters.size()) > K) {
    const auto c = static_cast<Eigen::Index>(clusters.size());
    Eigen::Index ba = 0, bb = 1;
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index a = 0; a < c; ++a)
      for (Eigen::Index b = a + 1; b < c; ++b)
        if (D(a, b) < best) {
          best = D(a, b);
          ba = a;
          bb = b;
        }
    res.heights.push_back(best);
    // Merge bb into ba; complete linkage keeps the larger distance.
    for (Eigen::Index x = 0; x < c; ++x) D(ba, x) = D(x, ba) = std::max(D(ba, x), D(bb, x));
    D(ba, ba) = 0.0;
    auto& into = clusters[ba];
    into.insert(into.end(), clusters[bb].begin(), clusters[bb].end());
    std::sort(into.begin(), into.end());
    clusters.erase(clusters.begin() + bb);
    // Drop row and column bb.
    Eigen::MatrixXd next(c - 1, c - 1);
    for (Eigen::Index a = 0, ra = 0; a < c; ++a) {
      if (a == bb) continue;
      for (Eigen::Index b = 0, rb = 0; b < c; ++b) {
        if (b == bb) continue;
        next(ra, rb++) = D(a, b);
      }
      ++ra;
    }
    D = std::move(next);
  }
  std::vector<int> labels(static_cast<std::size_t>(m), 0);
  for (std::size_t k = 0; k < clusters.size(); ++k)
    for (auto i : clusters[k]) labels[i] = static_cast<int>(k);
  res.partition = core::Partition(K, std::move(labels));
  return res;
}

TwoStageResult run_two_stage(const core::Dataset& dataset, int discount_column) {
  const auto I = dataset.size();
  const int K = dataset.K();
  TwoStageResult res;

  std::vector<Eigen::VectorXd> vecs(I);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < I; ++i) {
    vecs[i] = seasonal_residual_vector(dataset.entity(i), discount_column);
    const double spread = vecs[i].maxCoeff() - vecs[i].minCoeff();
    if (spread > 0.0)
      kept.push_back(i);
    else
      res.excluded.push_back(i);
  }
  if (static_cast<int>(kept.size()) < K)
    throw InfeasibleError("run_two_stage: fewer than K entities with a seasonal signal");

  const auto m = static_cast<Eigen::Index>(kept.size());
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = a + 1; b < m; ++b)
      D(a, b) = D(b, a) = correlation_distance(vecs[kept[a]], vecs[kept[b]]);
  const auto stage1 = complete_linkage_cluster(D, K);

  std::vector<int> labels(I, core::Partition::kUnassigned);
  for (Eigen::Index a = 0; a < m; ++a) labels[kept[a]] = stage1.partition[a];
  if (!res.excluded.empty()) {
    core::Partition partial(K, labels);
    std::vector<Eigen::VectorXd> betas;
    for (int k = 0; k < K; ++k) betas.push_back(core::cluster_cost(dataset, partial.members(k)).beta);
    for (auto i : res.excluded) {
      int best = 0;
      double best_err = std::numeric_limits<double>::infinity();
      for (int k = 0; k < K; ++k) {
        const double e = core::entity_error(dataset.entity(i), betas[k]);
        if (e < best_err) {
          best_err = e;
          best = k;
        }
      }
      labels[i] = best;
    }
  }
  res.partition = repair_min_size(dataset, core::Partition(K, std::move(labels)), dataset.n());
  res.sse = core::partition_sse(dataset, res.partition);
  return res;
}

}  // namespace gclr::heuristics
