#include "gclr/heuristics/spaeth.hpp"

#include <cmath>

#include "gclr/core/errors.hpp"
#include "gclr/heuristics/initial.hpp"

namespace gclr::heuristics {

namespace {

// A move must beat the current pair cost by this relative margin, so that
// rounding noise can never make the search cycle.
constexpr double kStrictMargin = 1e-12;

}  // namespace

SpaethResult run_spaeth(const core::CostModel& costs, std::uint64_t seed,
                        core::RunControl* control) {
  return run_spaeth_from(costs, random_partition(costs.dataset(), seed), control);
}

SpaethResult run_spaeth_from(const core::CostModel& costs, core::Partition start,
                             core::RunControl* control) {
  const auto& dataset = costs.dataset();
  const auto I = dataset.size();
  const int K = dataset.K();
  const auto n = static_cast<std::size_t>(dataset.n());
  const auto violations = core::validate_partition(start, dataset);
  if (!violations.empty())
    throw ContractError("run_spaeth: invalid start partition: " + violations.front().message);

  SpaethResult res;
  auto clusters = start.clusters();
  std::vector<double> E(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) E[k] = costs.sse(clusters[k]);
  auto total = [&] {
    double t = 0.0;
    for (double e : E) t += e;
    return t;
  };
  if (control) control->improved(total());

  std::vector<int> labels = start.labels();
  std::size_t quiet = 0;
  std::size_t i = 0;
  res.converged = true;
  while (quiet < I) {
    if (control && control->expired()) {
      res.converged = false;
      break;
    }
    ++res.visits;
    const int k = labels[i];
    bool moved = false;
    if (clusters[k].size() > n) {
      auto without = clusters[k];
      without.erase(i);
      const double e_without = costs.sse(without);
      int best_r = -1;
      double best_gain = 0.0;
      double best_e_with = 0.0;
      for (int r = 0; r < K; ++r) {
        if (r == k) continue;
        auto with = clusters[r];
        with.insert(i);
        const double e_with = costs.sse(with);
        const double before = E[k] + E[r];
        const double gain = before - (e_without + e_with);
        if (gain > kStrictMargin * std::max(before, 1e-300) && gain > best_gain) {
          best_gain = gain;
          best_r = r;
          best_e_with = e_with;
        }
      }
      if (best_r >= 0) {
        clusters[k] = std::move(without);
        clusters[best_r].insert(i);
        E[k] = e_without;
        E[best_r] = best_e_with;
        labels[i] = best_r;
        ++res.moves;
        moved = true;
        res.sse_after_move.push_back(total());
        if (control) control->improved(res.sse_after_move.back());
      }
    }
    quiet = moved ? 0 : quiet + 1;
    i = (i + 1) % I;
  }
  res.partition = core::Partition(K, std::move(labels));
  res.sse = total();
  return res;
}

}  // namespace gclr::heuristics
