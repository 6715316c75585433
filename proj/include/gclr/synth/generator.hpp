#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <vector>

#include "gclr/core/dataset.hpp"
#include "gclr/core/partition.hpp"

namespace gclr::synth {

struct SyntheticConfig {
  int I = 20;
  int K = 2;  // type 2 only
  int L = 52;
  std::uint64_t seed = 1;
  // Error deviation is S_A / noise_scale; infinity gives noise-free data.
  double noise_scale = 5.0;
  // Type 2: every planted cluster gets at least this many entities.
  int min_cluster_size = 1;
  // Type 2: fixed pattern per cluster instead of sampling.
  std::vector<int> cluster_patterns;
};

struct GroundParams {
  double S_A = 0.0;
  int pattern = 1;
  std::vector<int> promo_weeks;  // sorted
  std::vector<double> discounts;  // per promo week
  std::vector<double> p_promo;    // per promo week
};

struct SyntheticInstance {
  int type = 1;
  SyntheticConfig config;
  std::vector<core::Entity> entities;  // J = 53: discount, then 52 week dummies
  std::optional<core::Partition> target;
  std::vector<int> cluster_patterns;  // type 2
  std::vector<GroundParams> ground;

  core::Dataset dataset(int K, int n, core::DatasetOptions options = {}) const {
    return core::Dataset(entities, K, n, options);
  }
};

inline constexpr double kDiscountLevels[4] = {0.15, 0.20, 0.25, 0.30};

SyntheticInstance gen_type1(const SyntheticConfig& cfg);
SyntheticInstance gen_type2(const SyntheticConfig& cfg);

// Writes the instance CSV to path and the sidecar JSON (ground parameters,
// plus the target partition for type 2) next to it with extension .json.
void write_instance(const SyntheticInstance& instance, const std::filesystem::path& path);
std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

}  // namespace gclr::synth
