#include "gclr/heuristics/initial.hpp"

#include <algorithm>
#include <numeric>

#include "gclr/core/errors.hpp"
#include "gclr/core/ols.hpp"

namespace gclr::heuristics {

std::vector<int> random_labels(std::size_t I, int K, Rng& rng) {
  if (K < 1) throw ContractError("random_labels: K must be positive");
  std::uniform_int_distribution<int> pick(0, K - 1);
  std::vector<int> labels(I);
  for (auto& l : labels) l = pick(rng);
  return labels;
}

core::Partition random_partition(const core::Dataset& dataset, Rng& rng) {
  core::Partition p(dataset.K(), random_labels(dataset.size(), dataset.K(), rng));
  return repair_min_size(dataset, std::move(p), dataset.n());
}

core::Partition random_partition(const core::Dataset& dataset, std::uint64_t seed) {
  auto rng = make_rng(seed);
  return random_partition(dataset, rng);
}

core::Partition repair_min_size(const core::Dataset& dataset, core::Partition p, int n) {
  const auto I = dataset.size();
  const int K = p.K();
  if (p.size() != I) throw ContractError("repair_min_size: partition size mismatch");
  if (I < static_cast<std::size_t>(K) * static_cast<std::size_t>(n))
    throw InfeasibleError("repair_min_size: I < K * n");
  for (std::size_t i = 0; i < I; ++i)
    if (p[i] < 0 || p[i] >= K)
      throw ContractError("repair_min_size: entity " + std::to_string(i) + " unassigned");

  while (true) {
    auto sizes = p.sizes();
    int target = -1;
    for (int k = 0; k < K; ++k)
      if (static_cast<int>(sizes[k]) < n && (target < 0 || sizes[k] < sizes[target])) target = k;
    if (target < 0) return p;

    // Errors of outsiders under their current cluster's coefficients.
    std::vector<Eigen::VectorXd> betas(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k)
      if (k != target && sizes[k] > 0) betas[k] = core::cluster_cost(dataset, p.members(k)).beta;
    std::vector<std::pair<double, std::size_t>> ranked;
    for (std::size_t i = 0; i < I; ++i)
      if (p[i] != target) ranked.emplace_back(core::entity_error(dataset.entity(i), betas[p[i]]), i);
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    for (const auto& [err, i] : ranked) {
      if (static_cast<int>(sizes[target]) >= n) break;
      const int from = p[i];
      if (static_cast<int>(sizes[from]) - 1 < n) continue;
      p.assign(i, target);
      --sizes[from];
      ++sizes[target];
    }
    if (static_cast<int>(sizes[target]) < n)
      throw InfeasibleError("repair_min_size: no donor can give up an entity");
  }
}

}  // namespace gclr::heuristics
