#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "gclr/core/dataset.hpp"
#include "gclr/core/partition.hpp"
#include "gclr/core/random.hpp"
#include "gclr/core/run_control.hpp"

namespace gclr::heuristics {

struct GaParams {
  int H = 10;
  double p = 0.01;
  int max_stall = 50;
  std::uint64_t seed = 1;
  // Replace the worst member only when both children are worse than the
  // whole population (the condition as literally printed). Default: replace
  // it when the better child beats it.
  bool literal_replacement = false;
  int max_iterations = 1'000'000;
};

// Genes (k*J .. k*J+J-1) hold the coefficients of cluster k.
struct Chromosome {
  Eigen::VectorXd genes;
  double fitness = 0.0;
  core::Partition partition;
  double sse = 0.0;
};

struct GaResult {
  core::Partition partition;
  double sse = 0.0;
  int iterations = 0;
  bool converged = false;  // false when stopped by the deadline or iteration cap
  std::vector<double> best_history;  // incumbent SSE after each iteration
};

// Two independent fitness-proportional draws.
std::pair<std::size_t, std::size_t> roulette_select(const std::vector<double>& fitness,
                                                    core::Rng& rng);

// One-point crossover: genes at positions >= cut are exchanged.
std::pair<Eigen::VectorXd, Eigen::VectorXd> crossover_at(const Eigen::VectorXd& a,
                                                         const Eigen::VectorXd& b,
                                                         Eigen::Index cut);
// Cut uniform in [1, K*J - 1].
std::pair<Eigen::VectorXd, Eigen::VectorXd> crossover(const Eigen::VectorXd& a,
                                                      const Eigen::VectorXd& b, core::Rng& rng);

// With probability p, one uniformly chosen gene v becomes v +/- 2*d*v
// (or +/- 2*d when v = 0), d ~ U(0, 1).
Eigen::VectorXd mutate(Eigen::VectorXd genes, double p, core::Rng& rng);

// Nearest-regression assignment (ties to the smallest k), then min-size repair.
core::Partition decode_chromosome(const core::Dataset& dataset, const Eigen::VectorXd& genes);

// Refit every cluster of p; genes, SSE and fitness of the result.
Chromosome encode_partition(const core::Dataset& dataset, core::Partition p);

GaResult run_ga_lloyd(const core::Dataset& dataset, const GaParams& params,
                      core::RunControl* control = nullptr);

}  // namespace gclr::heuristics
