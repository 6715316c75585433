#include "gclr/core/partition.hpp"

#include "gclr/core/errors.hpp"

namespace gclr::core {

Partition::Partition(int K, std::vector<int> labels) : K_(K), labels_(std::move(labels)) {}

Partition Partition::from_clusters(std::size_t I, const std::vector<EntitySet>& clusters) {
  std::vector<int> labels(I, kUnassigned);
  for (std::size_t k = 0; k < clusters.size(); ++k)
    clusters[k].for_each([&](std::size_t i) { labels[i] = static_cast<int>(k); });
  return Partition(static_cast<int>(clusters.size()), std::move(labels));
}

EntitySet Partition::members(int k) const {
  EntitySet s(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == k) s.insert(i);
  return s;
}

std::vector<EntitySet> Partition::clusters() const {
  std::vector<EntitySet> out(static_cast<std::size_t>(K_), EntitySet(labels_.size()));
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] >= 0 && labels_[i] < K_) out[labels_[i]].insert(i);
  return out;
}

std::vector<std::size_t> Partition::sizes() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(K_), 0);
  for (int k : labels_)
    if (k >= 0 && k < K_) ++out[k];
  return out;
}

Partition Partition::canonical() const {
  std::vector<int> remap(static_cast<std::size_t>(std::max(K_, 0)), kUnassigned);
  std::vector<int> labels(labels_.size(), kUnassigned);
  int next = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const int k = labels_[i];
    if (k < 0 || k >= K_) continue;
    if (remap[k] == kUnassigned) remap[k] = next++;
    labels[i] = remap[k];
  }
  return Partition(K_, std::move(labels));
}

std::vector<Violation> validate_partition(const Partition& p, const Dataset& dataset) {
  std::vector<Violation> out;
  const auto I = dataset.size();
  if (p.K() != dataset.K())
    out.push_back({Violation::Kind::BadLabel, "partition has K = " + std::to_string(p.K()) +
                                                  ", dataset expects " +
                                                  std::to_string(dataset.K())});
  for (std::size_t i = 0; i < I; ++i) {
    if (i >= p.size() || p[i] == Partition::kUnassigned) {
      out.push_back({Violation::Kind::Completeness,
                     "entity " + dataset.entity(i).id + " is not assigned to any cluster"});
    } else if (p[i] < 0 || p[i] >= p.K()) {
      out.push_back({Violation::Kind::BadLabel, "entity " + dataset.entity(i).id +
                                                    " has cluster label " +
                                                    std::to_string(p[i])});
    }
  }
  if (p.size() > I)
    out.push_back({Violation::Kind::Completeness,
                   "partition assigns " + std::to_string(p.size() - I) + " unknown entities"});
  const auto sizes = p.sizes();
  for (std::size_t k = 0; k < sizes.size(); ++k)
    if (sizes[k] < static_cast<std::size_t>(dataset.n()))
      out.push_back({Violation::Kind::MinSize, "cluster " + std::to_string(k) + " has " +
                                                   std::to_string(sizes[k]) +
                                                   " entities, minimum is " +
                                                   std::to_string(dataset.n())});
  return out;
}

namespace {

void require_valid(const Partition& p, const Dataset& dataset) {
  const auto violations = validate_partition(p, dataset);
  if (!violations.empty()) throw ContractError("invalid partition: " + violations.front().message);
}

}  // namespace

double partition_sse(const CostModel& costs, const Partition& p) {
  require_valid(p, costs.dataset());
  double total = 0.0;
  for (const auto& c : p.clusters()) total += costs.sse(c);
  return total;
}

double partition_sse(const Dataset& dataset, const Partition& p) {
  require_valid(p, dataset);
  double total = 0.0;
  for (const auto& c : p.clusters()) total += cluster_cost(dataset, c).sse;
  return total;
}

}  // namespace gclr::core
