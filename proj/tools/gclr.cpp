// gclr: generate instances, run solvers, run experiment grids, compute metrics.
#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <map>
#include <optional>

#include "gclr/core/errors.hpp"
#include "gclr/harness/experiment.hpp"
#include "gclr/harness/metrics.hpp"
#include "gclr/harness/records.hpp"
#include "gclr/harness/solvers.hpp"
#include "gclr/synth/generator.hpp"
#include "gclr/version.hpp"

namespace {

using namespace gclr;
using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNotConverged = 3;

struct SolveArgs {
  std::string algo;
  int K = 2;
  int n = 2;
  std::uint64_t seed = 1;
  double time_limit = 3600.0;
  std::string in;
  std::string out;
  bool allow_degenerate = false;
  std::optional<int> pop_size;
  std::optional<double> mutation_prob;
  std::optional<int> max_stall;
  bool literal_replacement = false;
  std::optional<int> groups;
  std::optional<int> discount_col;
  std::optional<double> xi0;
  std::optional<int> k_max;
};

void add_solve_options(CLI::App* cmd, SolveArgs& a, bool with_algo) {
  if (with_algo)
    cmd->add_option("--algo", a.algo, "Algorithm")
        ->required()
        ->check(CLI::IsMember(harness::algorithm_names()));
  cmd->add_option("--k", a.K, "Number of clusters K")->capture_default_str();
  cmd->add_option("--n", a.n, "Minimum cluster size n")->capture_default_str();
  cmd->add_option("--seed", a.seed, "Random seed")->capture_default_str();
  cmd->add_option("--time-limit", a.time_limit, "Wall-clock limit in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--in", a.in, "Instance CSV")->required();
  cmd->add_option("--out", a.out, "Result JSON (default: stdout)");
  cmd->add_flag("--allow-degenerate", a.allow_degenerate,
                "Accept instances where n * min(L_i) <= J + 1");
  cmd->add_option("--pop-size", a.pop_size, "GA population size H");
  cmd->add_option("--mutation-prob", a.mutation_prob, "GA mutation probability");
  cmd->add_option("--max-stall", a.max_stall, "GA iterations without improvement");
  cmd->add_flag("--literal-replacement", a.literal_replacement,
                "GA: replace only with children worse than the whole population");
  cmd->add_option("--groups", a.groups, "CG heuristic group count R");
  cmd->add_option("--discount-col", a.discount_col, "Two-stage: predictor column of the discount");
  cmd->add_option("--xi0", a.xi0, "CG initial stabilization bound");
  cmd->add_option("--k-max", a.k_max, "CG stabilization iteration cap");
}

json solve_params(const SolveArgs& a) {
  json p = json::object();
  if (a.pop_size) p["pop_size"] = *a.pop_size;
  if (a.mutation_prob) p["mutation_prob"] = *a.mutation_prob;
  if (a.max_stall) p["max_stall"] = *a.max_stall;
  if (a.literal_replacement) p["literal_replacement"] = true;
  if (a.groups) p["groups"] = *a.groups;
  if (a.discount_col) p["discount_col"] = *a.discount_col;
  if (a.xi0) p["xi0"] = *a.xi0;
  if (a.k_max) p["k_max"] = *a.k_max;
  return p;
}

void emit(const ordered_json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << doc.dump(2) << '\n';
}

int run_solve(const SolveArgs& a) {
  if (!std::filesystem::is_regular_file(a.in)) throw ContractError("cannot open " + a.in);
  core::CostModel costs(core::load_dataset(a.in, a.n, a.K, {a.allow_degenerate}));
  auto control = core::RunControl::with_limit(a.time_limit);
  const auto params = solve_params(a);
  const auto r = harness::run_algorithm(a.algo, costs, params, a.seed, control);
  const double ms = control.elapsed_ms();
  ordered_json doc;
  doc["algorithm"] = a.algo;
  doc["instance"] = a.in;
  doc["K"] = a.K;
  doc["n"] = a.n;
  doc["seed"] = a.seed;
  doc["params"] = params;
  doc["objective"] = r.sse;
  for (const auto& [k, v] : r.details.items()) doc[k] = v;
  doc["converged"] = r.converged;
  doc["wall_time_ms"] = ms;
  doc["partition"] = harness::partition_json(costs.dataset(), r.partition);
  emit(doc, a.out);
  return r.converged ? kExitOk : kExitNotConverged;
}

struct GenArgs {
  int type = 1;
  int I = 20;
  int K = 2;
  std::uint64_t seed = 1;
  double noise_scale = 5.0;
  int min_cluster_size = 1;
  std::string out;
};

int run_gen(const GenArgs& a) {
  synth::SyntheticConfig cfg;
  cfg.I = a.I;
  cfg.K = a.K;
  cfg.seed = a.seed;
  cfg.noise_scale = a.noise_scale;
  cfg.min_cluster_size = a.min_cluster_size;
  const auto inst = a.type == 2 ? synth::gen_type2(cfg) : synth::gen_type1(cfg);
  synth::write_instance(inst, a.out);
  std::cerr << "wrote " << a.out << " and " << synth::sidecar_path(a.out).string() << '\n';
  return kExitOk;
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ContractError("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

int run_bench(const std::string& config_path, const std::string& out_dir) {
  const auto raw = read_json_file(config_path);
  const auto base = std::filesystem::path(config_path).parent_path();
  const auto cfg = harness::parse_experiment_config(raw, base);
  const auto out = harness::run_experiment(cfg);
  harness::write_experiment_outputs(out, raw, out_dir);
  std::size_t failed = 0, open = 0;
  for (const auto& r : out.records) {
    if (!r.error.empty()) ++failed;
    else if (!r.converged) ++open;
  }
  std::cerr << out.records.size() << " runs, " << failed << " failed, " << open
            << " stopped by the time limit; results in " << out_dir << '\n';
  return kExitOk;
}

// Per-record metrics against the other rows of the same (instance, K):
// OptGap against the best exact CG objective when present, gap from the best
// algorithm otherwise.
int run_metrics(const std::string& records_path, const std::string& config_path) {
  std::ifstream f(records_path);
  if (!f || !std::filesystem::is_regular_file(records_path)) throw ContractError("cannot open " + records_path);
  const auto records = harness::read_records_csv(f);

  if (!config_path.empty()) {
    const auto cfg = harness::parse_experiment_config(
        read_json_file(config_path), std::filesystem::path(config_path).parent_path());
    std::map<std::string, std::vector<core::Entity>> entities;
    for (const auto& s : cfg.instances) {
      if (s.gen)
        entities[s.id] = (s.type == 2 ? synth::gen_type2(*s.gen) : synth::gen_type1(*s.gen)).entities;
      else
        entities[s.id] = core::load_dataset(s.path, 1, 1, {true}).entities();
    }
    for (const auto& r : records) {
      if (!r.error.empty()) continue;
      const auto it = entities.find(r.instance_id);
      if (it == entities.end()) throw ContractError("record for unknown instance " + r.instance_id);
      harness::verify_record(r, core::Dataset(it->second, r.K, r.n, {true}));
    }
  }

  std::map<std::pair<std::string, int>, double> best_all, best_cg;
  for (const auto& r : records) {
    if (!r.error.empty() || !std::isfinite(r.sse)) continue;
    const auto key = std::make_pair(r.instance_id, r.K);
    auto upd = [&](auto& m) {
      auto [it, fresh] = m.emplace(key, r.sse);
      if (!fresh) it->second = std::min(it->second, r.sse);
    };
    upd(best_all);
    if ((r.algorithm == "cg" || r.algorithm == "cg-plain" || r.algorithm == "brute") && r.converged)
      upd(best_cg);
  }
  std::cout << "instance_id,cell,algorithm,K,seed,sse,opt_gap,gap_from_best\n";
  std::cout.precision(10);
  for (const auto& r : records) {
    std::cout << harness::csv_quote(r.instance_id) << ',' << r.cell << ',' << r.algorithm << ','
              << r.K << ',' << r.seed << ',';
    if (!r.error.empty() || !std::isfinite(r.sse)) {
      std::cout << ",,\n";
      continue;
    }
    const auto key = std::make_pair(r.instance_id, r.K);
    std::cout << r.sse << ',';
    if (auto it = best_cg.find(key); it != best_cg.end() && it->second > 0)
      std::cout << harness::opt_gap(r.sse, it->second);
    std::cout << ',';
    if (auto it = best_all.find(key); it->second > 0)
      std::cout << harness::gap_from_best(r.sse, {it->second});
    std::cout << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized clusterwise linear regression solvers"};
  app.set_version_flag("--version", std::string(gclr::kVersion));
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic instance (CSV plus sidecar JSON)");
  gen_cmd->add_option("--type", gen.type, "Generator type")->check(CLI::IsMember({1, 2}))->capture_default_str();
  gen_cmd->add_option("--entities", gen.I, "Entity count I")->check(CLI::PositiveNumber)->capture_default_str();
  gen_cmd->add_option("--k", gen.K, "Planted cluster count (type 2)")->check(CLI::PositiveNumber)->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--noise-scale", gen.noise_scale, "Noise deviation divisor")->capture_default_str();
  gen_cmd->add_option("--min-cluster-size", gen.min_cluster_size,
                      "Type 2: minimum planted cluster size")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output CSV path")->required();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm on one instance");
  add_solve_options(solve_cmd, solve, true);

  // One shortcut subcommand per algorithm, same flags minus --algo.
  std::vector<std::pair<CLI::App*, std::string>> shortcuts;
  for (const auto& name : gclr::harness::algorithm_names()) {
    auto* cmd = app.add_subcommand(name, "Shortcut for solve --algo " + name);
    add_solve_options(cmd, solve, false);
    shortcuts.emplace_back(cmd, name);
  }

  std::string bench_config, bench_out = "results";
  auto* bench_cmd = app.add_subcommand("bench", "Run an experiment grid from a JSON config");
  bench_cmd->add_option("--config", bench_config, "Experiment config JSON")->required();
  bench_cmd->add_option("--out", bench_out, "Output directory")->capture_default_str();

  std::string metrics_records, metrics_config;
  auto* metrics_cmd = app.add_subcommand("metrics", "Per-run optimality gaps from a records CSV");
  metrics_cmd->add_option("--records", metrics_records, "records.csv from bench")->required();
  metrics_cmd->add_option("--config", metrics_config,
                          "Experiment config; when given, every stored partition is re-scored");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*solve_cmd) return run_solve(solve);
    for (auto& [cmd, name] : shortcuts)
      if (*cmd) {
        solve.algo = name;
        return run_solve(solve);
      }
    if (*bench_cmd) return run_bench(bench_config, bench_out);
    if (*metrics_cmd) return run_metrics(metrics_records, metrics_config);
  } catch (const gclr::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const gclr::ContractError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const gclr::InfeasibleError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const gclr::DegenerateError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const gclr::RefusalError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
