#include "gclr/harness/solvers.hpp"

#include <set>

#include "gclr/core/errors.hpp"
#include "gclr/exact/brute_force.hpp"
#include "gclr/exact/column_generation.hpp"
#include "gclr/heuristics/cg_heuristic.hpp"
#include "gclr/heuristics/ga_lloyd.hpp"
#include "gclr/heuristics/spaeth.hpp"
#include "gclr/heuristics/two_stage.hpp"

namespace gclr::harness {

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"cg",     "cg-plain",  "cg-heur", "ga-lloyd",
                                              "spaeth", "two-stage", "brute"};
  return names;
}

namespace {

void allow_only(const nlohmann::json& params, std::initializer_list<const char*> keys,
                const std::string& algo) {
  if (params.is_null()) return;
  if (!params.is_object()) throw ContractError(algo + ": params must be a JSON object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : params.items())
    if (!allowed.count(k)) throw ContractError(algo + ": unknown parameter '" + k + "'");
}

template <class T>
T get(const nlohmann::json& params, const char* key, T fallback) {
  if (params.is_object() && params.contains(key)) return params.at(key).get<T>();
  return fallback;
}

exact::CgOptions cg_options(const nlohmann::json& params, core::RunControl& control) {
  exact::CgOptions o;
  o.xi0 = get(params, "xi0", o.xi0);
  o.k_max = get(params, "k_max", o.k_max);
  o.control = &control;
  return o;
}

nlohmann::ordered_json cg_details(const exact::CgResult& r) {
  return {{"lp_objective", r.lp_objective}, {"iterations", r.iterations},
          {"integral", r.integral},         {"column_pool_size", r.pool_size}};
}

}  // namespace

AlgorithmOutcome run_algorithm(const std::string& name, const core::CostModel& costs,
                               const nlohmann::json& params, std::uint64_t seed,
                               core::RunControl& control) {
  const auto& dataset = costs.dataset();
  AlgorithmOutcome out;
  if (name == "cg" || name == "cg-plain") {
    allow_only(params, {"xi0", "k_max"}, name);
    auto o = cg_options(params, control);
    const auto r = name == "cg" ? exact::run_cg(costs, seed, o) : exact::run_cg_plain(costs, seed, o);
    out.partition = r.partition;
    out.sse = r.objective;
    out.converged = r.converged;
    out.details = cg_details(r);
  } else if (name == "cg-heur") {
    allow_only(params, {"groups", "xi0", "k_max"}, name);
    const int R = get(params, "groups", 8);
    const auto r = heuristics::run_cg_heuristic(costs, R, seed, cg_options(params, control));
    out.partition = r.partition;
    out.sse = r.sse;
    out.converged = r.cg.converged;
    out.details = cg_details(r.cg);
    out.details["groups"] = r.groups.R();
  } else if (name == "ga-lloyd") {
    allow_only(params, {"pop_size", "mutation_prob", "max_stall", "literal_replacement"}, name);
    heuristics::GaParams gp;
    gp.H = get(params, "pop_size", gp.H);
    gp.p = get(params, "mutation_prob", gp.p);
    gp.max_stall = get(params, "max_stall", gp.max_stall);
    gp.literal_replacement = get(params, "literal_replacement", gp.literal_replacement);
    gp.seed = seed;
    const auto r = heuristics::run_ga_lloyd(dataset, gp, &control);
    out.partition = r.partition;
    out.sse = r.sse;
    out.converged = r.converged;
    out.details = {{"iterations", r.iterations}};
  } else if (name == "spaeth") {
    allow_only(params, {}, name);
    const auto r = heuristics::run_spaeth(costs, seed, &control);
    out.partition = r.partition;
    out.sse = r.sse;
    out.converged = r.converged;
    out.details = {{"moves", r.moves}, {"visits", r.visits}};
  } else if (name == "two-stage") {
    allow_only(params, {"discount_col"}, name);
    const auto r = heuristics::run_two_stage(dataset, get(params, "discount_col", 0));
    out.partition = r.partition;
    out.sse = r.sse;
    out.details = {{"excluded", r.excluded.size()}};
    control.improved(out.sse);
  } else if (name == "brute") {
    allow_only(params, {}, name);
    const exact::UnitProblem problem(costs);
    const auto r = exact::brute_force_optimum(problem);
    out.partition = r.partition;
    out.sse = r.sse;
    out.details = {{"partitions_evaluated", r.evaluated}};
    control.improved(out.sse);
  } else {
    throw ContractError("unknown algorithm '" + name + "'");
  }
  return out;
}

nlohmann::ordered_json partition_json(const core::Dataset& dataset, const core::Partition& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < dataset.size(); ++i) j[dataset.entity(i).id] = p[i];
  return j;
}

}  // namespace gclr::harness
