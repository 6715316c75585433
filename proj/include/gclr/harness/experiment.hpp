#pragma once

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gclr/harness/records.hpp"
#include "gclr/synth/generator.hpp"

namespace gclr::harness {

struct InstanceSpec {
  std::string id;
  std::filesystem::path path;                 // CSV instance, or
  std::optional<synth::SyntheticConfig> gen;  // generator spec
  int type = 1;
};

struct AlgorithmSpec {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
};

struct ExperimentConfig {
  std::vector<InstanceSpec> instances;
  std::vector<AlgorithmSpec> algorithms;
  std::vector<int> K_values{2};
  int n = 2;
  int repetitions = 1;
  std::uint64_t seed = 1;  // repetition r uses seed + r
  double time_limit = 60.0;  // seconds per run
  int workers = 1;
  bool allow_degenerate = false;
};

// Reads the JSON layout documented in the README; throws ContractError on
// missing or invalid fields. Relative instance paths resolve against base.
ExperimentConfig parse_experiment_config(const nlohmann::json& j,
                                         const std::filesystem::path& base = {});

struct ExperimentOutput {
  std::vector<RunRecord> records;
  std::vector<TracePoint> traces;
};

// Runs every (instance, K, algorithm, repetition) cell. Cells of one
// (instance, K) pair share a cost cache and run on up to `workers` threads;
// rows come out in cell order regardless of scheduling. A failing cell is
// recorded with its error message and the run continues.
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

// records.csv, traces.csv and manifest.json (config hash and version).
void write_experiment_outputs(const ExperimentOutput& out, const nlohmann::json& raw_config,
                              const std::filesystem::path& dir);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace gclr::harness
