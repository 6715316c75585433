#include "gclr/heuristics/ga_lloyd.hpp"

#include <cmath>

#include "gclr/core/errors.hpp"
#include "gclr/core/kernels.hpp"
#include "gclr/core/ols.hpp"
#include "gclr/heuristics/initial.hpp"

namespace gclr::heuristics {

namespace {

// Fitness is 1/SSE; a zero-SSE partition gets a large finite value instead.
double fitness_of(double sse, double total_ss) {
  return 1.0 / std::max(sse, 1e-12 * std::max(total_ss, 1e-300));
}

double total_sum_squares(const core::Dataset& dataset) {
  double t = 0.0;
  for (const auto& e : dataset.entities()) t += e.y.squaredNorm();
  return t;
}

}  // namespace

std::pair<std::size_t, std::size_t> roulette_select(const std::vector<double>& fitness,
                                                    core::Rng& rng) {
  if (fitness.size() < 2) throw ContractError("roulette_select: population needs H >= 2");
  double total = 0.0;
  for (double f : fitness) {
    if (!std::isfinite(f) || f <= 0.0)
      throw ContractError("roulette_select: fitness values must be positive and finite");
    total += f;
  }
  std::uniform_real_distribution<double> u(0.0, total);
  auto draw = [&] {
    const double x = u(rng);
    double acc = 0.0;
    for (std::size_t h = 0; h < fitness.size(); ++h) {
      acc += fitness[h];
      if (x < acc) return h;
    }
    return fitness.size() - 1;
  };
  const auto a = draw();
  const auto b = draw();
  return {a, b};
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> crossover_at(const Eigen::VectorXd& a,
                                                         const Eigen::VectorXd& b,
                                                         Eigen::Index cut) {
  if (a.size() != b.size()) throw ContractError("crossover: parents differ in length");
  if (cut < 1 || cut > a.size() - 1)
    throw ContractError("crossover: cut " + std::to_string(cut) + " outside [1, " +
                        std::to_string(a.size() - 1) + "]");
  Eigen::VectorXd ca = a;
  Eigen::VectorXd cb = b;
  const auto tail = a.size() - cut;
  ca.tail(tail) = b.tail(tail);
  cb.tail(tail) = a.tail(tail);
  return {std::move(ca), std::move(cb)};
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> crossover(const Eigen::VectorXd& a,
                                                      const Eigen::VectorXd& b, core::Rng& rng) {
  if (a.size() < 2) throw ContractError("crossover: need at least two genes");
  std::uniform_int_distribution<Eigen::Index> pick(1, a.size() - 1);
  return crossover_at(a, b, pick(rng));
}

Eigen::VectorXd mutate(Eigen::VectorXd genes, double p, core::Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw ContractError("mutate: probability outside [0, 1]");
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (genes.size() == 0 || !(u(rng) < p)) return genes;
  std::uniform_int_distribution<Eigen::Index> pos(0, genes.size() - 1);
  const auto g = pos(rng);
  const double sign = u(rng) < 0.5 ? -1.0 : 1.0;
  double d = u(rng);
  while (d == 0.0) d = u(rng);
  const double v = genes[g];
  genes[g] = v != 0.0 ? v + sign * 2.0 * d * v : sign * 2.0 * d;
  return genes;
}

core::Partition decode_chromosome(const core::Dataset& dataset, const Eigen::VectorXd& genes) {
  const int K = dataset.K();
  const int J = dataset.J();
  if (genes.size() != static_cast<Eigen::Index>(K) * J)
    throw ContractError("decode_chromosome: expected " + std::to_string(K * J) + " genes");
  const Eigen::Map<const Eigen::MatrixXd> betas(genes.data(), J, K);
  const auto labels = core::row_argmin(core::entity_error_matrix(dataset, betas));
  return repair_min_size(dataset, core::Partition(K, labels), dataset.n());
}

Chromosome encode_partition(const core::Dataset& dataset, core::Partition p) {
  const int K = p.K();
  const int J = dataset.J();
  Chromosome c;
  c.genes = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(K) * J);
  const auto clusters = p.clusters();
  std::vector<core::FitResult> fits(static_cast<std::size_t>(K));
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < K; ++k)
    if (!clusters[k].empty()) fits[k] = core::cluster_cost(dataset, clusters[k]);
  for (int k = 0; k < K; ++k) {
    if (clusters[k].empty()) continue;
    c.genes.segment(static_cast<Eigen::Index>(k) * J, J) = fits[k].beta;
    c.sse += fits[k].sse;
  }
  c.partition = std::move(p);
  return c;
}

GaResult run_ga_lloyd(const core::Dataset& dataset, const GaParams& params,
                      core::RunControl* control) {
  if (params.H < 2) throw ContractError("run_ga_lloyd: population size H must be at least 2");
  if (!(params.p >= 0.0 && params.p <= 1.0))
    throw ContractError("run_ga_lloyd: mutation probability outside [0, 1]");
  if (params.max_stall < 1) throw ContractError("run_ga_lloyd: max_stall must be positive");

  auto rng = core::make_rng(params.seed);
  const double total_ss = total_sum_squares(dataset);

  std::vector<Chromosome> pop;
  pop.reserve(static_cast<std::size_t>(params.H));
  for (int h = 0; h < params.H; ++h) {
    auto c = encode_partition(dataset, random_partition(dataset, rng));
    c.fitness = fitness_of(c.sse, total_ss);
    pop.push_back(std::move(c));
  }

  GaResult res;
  std::size_t best = 0;
  for (std::size_t h = 1; h < pop.size(); ++h)
    if (pop[h].sse < pop[best].sse) best = h;
  res.partition = pop[best].partition;
  res.sse = pop[best].sse;
  if (control) control->improved(res.sse);

  std::vector<double> fitness(pop.size());
  int stall = 0;
  res.converged = true;
  while (stall < params.max_stall) {
    if (res.iterations >= params.max_iterations || (control && control->expired())) {
      res.converged = false;
      break;
    }
    ++res.iterations;
    for (std::size_t h = 0; h < pop.size(); ++h) fitness[h] = pop[h].fitness;
    const auto [a, b] = roulette_select(fitness, rng);
    auto [ga, gb] = crossover(pop[a].genes, pop[b].genes, rng);
    ga = mutate(std::move(ga), params.p, rng);
    gb = mutate(std::move(gb), params.p, rng);

    auto child_a = encode_partition(dataset, decode_chromosome(dataset, ga));
    auto child_b = encode_partition(dataset, decode_chromosome(dataset, gb));
    child_a.fitness = fitness_of(child_a.sse, total_ss);
    child_b.fitness = fitness_of(child_b.sse, total_ss);
    auto& better = child_b.fitness > child_a.fitness ? child_b : child_a;

    std::size_t worst = 0;
    for (std::size_t h = 1; h < pop.size(); ++h)
      if (pop[h].fitness < pop[worst].fitness) worst = h;
    const bool replace = params.literal_replacement
                             ? std::max(child_a.fitness, child_b.fitness) < pop[worst].fitness
                             : better.fitness > pop[worst].fitness;

    if (better.sse < res.sse) {
      res.sse = better.sse;
      res.partition = better.partition;
      stall = 0;
      if (control) control->improved(res.sse);
    } else {
      ++stall;
    }
    if (replace) pop[worst] = std::move(better);
    res.best_history.push_back(res.sse);
  }
  return res;
}

}  // namespace gclr::heuristics
