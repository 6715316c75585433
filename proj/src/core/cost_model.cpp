#include "gclr/core/cost_model.hpp"

#include <cmath>
#include <limits>
#include <mutex>

#include "gclr/core/errors.hpp"

namespace gclr::core {

namespace {

// Pivoted symmetric elimination in place on the lower triangle of a.
// Predictors are eliminated most-independent first (ties to the highest
// index); the response stays in the last row and column and its final
// diagonal is the SSE. Each step only touches the nonzero pattern of the
// pivot column, so dummy-heavy designs with orthogonal columns stay cheap.
double eliminate(Eigen::MatrixXd& a) {
  const auto dim = a.rows();
  const auto p = dim - 1;
  thread_local std::vector<double> diag0;
  thread_local std::vector<Eigen::Index> nz;
  diag0.resize(static_cast<std::size_t>(p));
  for (Eigen::Index j = 0; j < p; ++j) diag0[j] = a(j, j);

  for (Eigen::Index k = 0; k < p; ++k) {
    Eigen::Index piv = -1;
    double best = kGramPivotRatio;
    for (Eigen::Index j = p - 1; j >= k; --j) {
      if (!(diag0[j] > 0.0)) continue;
      const double ratio = a(j, j) / diag0[j];
      if (ratio > best) {
        best = ratio;
        piv = j;
      }
    }
    if (piv < 0) break;  // every remaining predictor is dependent
    if (piv != k) {
      std::swap(diag0[k], diag0[piv]);
      std::swap(a(k, k), a(piv, piv));
      for (Eigen::Index i = k + 1; i < piv; ++i) std::swap(a(i, k), a(piv, i));
      for (Eigen::Index i = piv + 1; i < dim; ++i) std::swap(a(i, k), a(i, piv));
    }
    const double inv = 1.0 / a(k, k);
    nz.clear();
    for (Eigen::Index i = k + 1; i < dim; ++i)
      if (a(i, k) != 0.0) nz.push_back(i);
    for (std::size_t tj = 0; tj < nz.size(); ++tj) {
      const auto j = nz[tj];
      const double f = a(j, k) * inv;
      for (std::size_t ti = tj; ti < nz.size(); ++ti) a(nz[ti], j) -= a(nz[ti], k) * f;
    }
  }
  return std::max(a(p, p), 0.0);
}

}  // namespace

double gram_sse(const Eigen::MatrixXd& augmented_gram) {
  thread_local Eigen::MatrixXd work;
  work = augmented_gram;
  return eliminate(work);
}

CostModel::CostModel(Dataset dataset, std::size_t cache_capacity)
    : dataset_(std::move(dataset)),
      capacity_(cache_capacity),
      shards_(std::make_unique<std::array<Shard, kShards>>()) {
  const auto J = dataset_.J();
  grams_.reserve(dataset_.size());
  for (const auto& e : dataset_.entities()) {
    Eigen::MatrixXd aug(e.X.rows(), J + 1);
    aug.leftCols(J) = e.X;
    aug.col(J) = e.y;
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(J + 1, J + 1);
    g.selfadjointView<Eigen::Lower>().rankUpdate(aug.transpose());
    g.triangularView<Eigen::StrictlyUpper>() = g.transpose();
    auto& nz = sparse_lower_.emplace_back();
    for (Eigen::Index c = 0; c <= J; ++c)
      for (Eigen::Index r = c; r <= J; ++r)
        if (g(r, c) != 0.0) nz.emplace_back(c * (J + 1) + r, g(r, c));
    grams_.push_back(std::move(g));
    total_ss_ += e.y.squaredNorm();
  }
  if (size() >= 1 && size() <= kDenseTableMaxEntities) {
    dense_ = std::vector<std::atomic<double>>(std::size_t{1} << size());
    for (auto& slot : dense_) slot.store(std::numeric_limits<double>::quiet_NaN(), std::memory_order_relaxed);
  }
}

Eigen::MatrixXd CostModel::gram(const EntitySet& S) const {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(J() + 1, J() + 1);
  S.for_each([&](std::size_t i) { g += grams_[i]; });
  return g;
}

double CostModel::sse_uncached(const EntitySet& S) const {
  if (S.empty()) throw ContractError("cluster cost of an empty set");
  thread_local Eigen::MatrixXd work;
  work.setZero(J() + 1, J() + 1);
  double* w = work.data();
  S.for_each([&](std::size_t i) {
    for (const auto& [at, v] : sparse_lower_[i]) w[at] += v;
  });
  return eliminate(work);
}

double CostModel::sse(const EntitySet& S) const {
  if (!dense_.empty() && S.universe() == size()) {
    auto& slot = dense_[static_cast<std::size_t>(S.words()[0])];
    double v = slot.load(std::memory_order_relaxed);
    if (v == v) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return v;
    }
    v = sse_uncached(S);
    if (!std::isnan(slot.exchange(v, std::memory_order_relaxed)))
      return v;
    cached_.fetch_add(1, std::memory_order_relaxed);
    return v;
  }
  auto& shard = (*shards_)[S.hash() % kShards];
  {
    std::shared_lock lock(shard.mutex);
    if (auto it = shard.values.find(S); it != shard.values.end()) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second;
    }
  }
  const double value = sse_uncached(S);
  if (cached_.load(std::memory_order_relaxed) < capacity_) {
    std::unique_lock lock(shard.mutex);
    if (shard.values.emplace(S, value).second) cached_.fetch_add(1, std::memory_order_relaxed);
  }
  return value;
}

FitResult CostModel::fit(const EntitySet& S) const { return cluster_cost(dataset_, S); }

double CostModel::entity_error(std::size_t i, const Eigen::Ref<const Eigen::VectorXd>& beta) const {
  return core::entity_error(dataset_.entity(i), beta);
}

}  // namespace gclr::core
