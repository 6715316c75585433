#include "gclr/harness/experiment.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <memory>

#include <omp.h>

#include "gclr/core/cost_model.hpp"
#include "gclr/core/errors.hpp"
#include "gclr/harness/solvers.hpp"
#include "gclr/version.hpp"

namespace gclr::harness {

namespace {

template <class T>
T field(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("experiment config: field '") + key + "': " + e.what());
  }
}

std::vector<core::Entity> load_entities(const InstanceSpec& spec) {
  if (spec.gen) {
    const auto inst = spec.type == 2 ? synth::gen_type2(*spec.gen) : synth::gen_type1(*spec.gen);
    return inst.entities;
  }
  // K = n = 1 always validates except for degeneracy, which is checked per cell.
  return core::load_dataset(spec.path, 1, 1, {true}).entities();
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

ExperimentConfig parse_experiment_config(const nlohmann::json& j, const std::filesystem::path& base) {
  if (!j.is_object()) throw ContractError("experiment config must be a JSON object");
  ExperimentConfig cfg;
  if (!j.contains("instances") || !j.at("instances").is_array() || j.at("instances").empty())
    throw ContractError("experiment config: 'instances' must be a nonempty array");
  for (const auto& ij : j.at("instances")) {
    InstanceSpec s;
    if (ij.is_string()) {
      s.path = ij.get<std::string>();
    } else if (ij.contains("path")) {
      s.path = ij.at("path").get<std::string>();
    } else if (ij.contains("generate")) {
      const auto& g = ij.at("generate");
      synth::SyntheticConfig sc;
      s.type = field(g, "type", 1);
      if (s.type != 1 && s.type != 2) throw ContractError("experiment config: generator type must be 1 or 2");
      sc.I = field(g, "I", sc.I);
      sc.K = field(g, "K", sc.K);
      sc.seed = field(g, "seed", sc.seed);
      sc.noise_scale = field(g, "noise_scale", sc.noise_scale);
      sc.min_cluster_size = field(g, "min_cluster_size", sc.min_cluster_size);
      s.gen = sc;
    } else {
      throw ContractError("experiment config: an instance needs 'path' or 'generate'");
    }
    if (!s.gen && s.path.is_relative() && !base.empty()) s.path = base / s.path;
    s.id = ij.is_object() ? field<std::string>(ij, "id", "") : "";
    if (s.id.empty())
      s.id = s.gen ? "gen" + std::to_string(s.type) + "_I" + std::to_string(s.gen->I) + "_K" +
                         std::to_string(s.gen->K) + "_s" + std::to_string(s.gen->seed)
                   : s.path.stem().string();
    cfg.instances.push_back(std::move(s));
  }
  if (!j.contains("algorithms") || !j.at("algorithms").is_array() || j.at("algorithms").empty())
    throw ContractError("experiment config: 'algorithms' must be a nonempty array");
  for (const auto& aj : j.at("algorithms")) {
    AlgorithmSpec a;
    if (aj.is_string()) {
      a.name = aj.get<std::string>();
    } else {
      a.name = field<std::string>(aj, "name", "");
      a.params = aj.contains("params") ? aj.at("params") : nlohmann::json::object();
    }
    const auto& names = algorithm_names();
    if (std::find(names.begin(), names.end(), a.name) == names.end())
      throw ContractError("experiment config: unknown algorithm '" + a.name + "'");
    cfg.algorithms.push_back(std::move(a));
  }
  cfg.K_values = field(j, "K", cfg.K_values);
  cfg.n = field(j, "n", cfg.n);
  cfg.repetitions = field(j, "repetitions", cfg.repetitions);
  cfg.seed = field(j, "seed", cfg.seed);
  cfg.time_limit = field(j, "time_limit", cfg.time_limit);
  cfg.workers = field(j, "workers", cfg.workers);
  cfg.allow_degenerate = field(j, "allow_degenerate", cfg.allow_degenerate);
  if (cfg.repetitions < 1) throw ContractError("experiment config: repetitions must be >= 1");
  if (!(cfg.time_limit > 0.0)) throw ContractError("experiment config: time_limit must be > 0");
  if (cfg.K_values.empty()) throw ContractError("experiment config: 'K' must list at least one value");
  if (cfg.workers < 1) throw ContractError("experiment config: workers must be >= 1");
  return cfg;
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg) {
  ExperimentOutput out;
  for (const auto& spec : cfg.instances) {
    std::vector<core::Entity> entities;
    std::string load_error;
    try {
      entities = load_entities(spec);
    } catch (const std::exception& e) {
      load_error = e.what();
    }
    for (int K : cfg.K_values) {
      const std::string cell = std::to_string(entities.size()) + "_" + std::to_string(K);
      struct Task {
        const AlgorithmSpec* algo;
        std::uint64_t seed;
      };
      std::vector<Task> tasks;
      for (const auto& a : cfg.algorithms)
        for (int r = 0; r < cfg.repetitions; ++r)
          tasks.push_back({&a, cfg.seed + static_cast<std::uint64_t>(r)});
      std::vector<RunRecord> records(tasks.size());
      std::vector<std::vector<TracePoint>> traces(tasks.size());
      for (std::size_t t = 0; t < tasks.size(); ++t) {
        auto& r = records[t];
        r.instance_id = spec.id;
        r.cell = cell;
        r.algorithm = tasks[t].algo->name;
        r.K = K;
        r.n = cfg.n;
        r.seed = tasks[t].seed;
        r.params = tasks[t].algo->params.dump();
        r.sse = std::numeric_limits<double>::quiet_NaN();
      }

      std::unique_ptr<core::CostModel> costs;
      std::string setup_error = load_error;
      if (setup_error.empty()) {
        try {
          costs = std::make_unique<core::CostModel>(
              core::Dataset(entities, K, cfg.n, {cfg.allow_degenerate}));
        } catch (const std::exception& e) {
          setup_error = e.what();
        }
      }
      if (!setup_error.empty()) {
        for (auto& r : records) r.error = setup_error;
      } else {
        const auto m = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.workers)
        for (std::ptrdiff_t t = 0; t < m; ++t) {
          auto& r = records[t];
          auto control = core::RunControl::with_limit(cfg.time_limit);
          control.set_trace([&, t](double ms, double sse) {
            traces[t].push_back({r.instance_id, r.algorithm, K, r.seed, ms, sse});
          });
          try {
            const auto res = run_algorithm(tasks[t].algo->name, *costs, tasks[t].algo->params,
                                           tasks[t].seed, control);
            r.sse = res.sse;
            r.converged = res.converged;
            r.labels = res.partition.labels();
          } catch (const std::exception& e) {
            r.error = e.what();
          }
          r.wall_time_ms = control.elapsed_ms();
        }
      }
      for (std::size_t t = 0; t < tasks.size(); ++t) {
        out.records.push_back(std::move(records[t]));
        for (auto& p : traces[t]) out.traces.push_back(std::move(p));
      }
    }
  }
  return out;
}

void write_experiment_outputs(const ExperimentOutput& out, const nlohmann::json& raw_config,
                              const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) throw Error("cannot write " + (dir / name).string());
    return f;
  };
  {
    auto f = open("records.csv");
    write_records_csv(f, out.records);
  }
  {
    auto f = open("traces.csv");
    write_traces_csv(f, out.traces);
  }
  nlohmann::ordered_json manifest;
  manifest["software"] = "gclr";
  manifest["version"] = kVersion;
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(fnv1a64(raw_config.dump())));
  manifest["config_hash"] = std::string("fnv1a64:") + hash;
  manifest["config"] = raw_config;
  manifest["records"] = "records.csv";
  manifest["traces"] = "traces.csv";
  manifest["record_count"] = out.records.size();
  auto f = open("manifest.json");
  f << manifest.dump(2) << '\n';
}

}  // namespace gclr::harness
