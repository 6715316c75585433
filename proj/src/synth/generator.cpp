#include "gclr/synth/generator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <random>

#include "gclr/core/errors.hpp"
#include "gclr/core/random.hpp"
#include "gclr/synth/patterns.hpp"

namespace gclr::synth {

namespace {

// Separate stream for cluster-level draws, far from the entity streams.
constexpr std::uint64_t kClusterStream = std::uint64_t{1} << 40;
constexpr int kAssignmentRetries = 1000;

void check(const SyntheticConfig& cfg) {
  if (cfg.I < 1) throw ContractError("synthetic config: I must be at least 1");
  if (cfg.L != kWeeks) throw ContractError("synthetic config: L must be 52");
  if (!(cfg.noise_scale > 0.0)) throw ContractError("synthetic config: noise_scale must be positive");
}

double p_promo_draw(double discount, core::Rng& rng) {
  const int level = static_cast<int>(std::lround(discount * 20.0)) - 3;  // 0.15 -> 0 ... 0.30 -> 3
  const double lo = 0.4 + 0.1 * level;
  return std::uniform_real_distribution<double>(lo, lo + 0.1)(rng);
}

// One entity from its own stream. pattern <= 0 means "draw it".
core::Entity make_entity(const SyntheticConfig& cfg, int i, int pattern, GroundParams& g) {
  auto rng = core::make_rng(cfg.seed, static_cast<std::uint64_t>(i));
  g.S_A = std::uniform_real_distribution<double>(100.0, 200.0)(rng);
  g.pattern = pattern > 0 ? pattern : std::uniform_int_distribution<int>(1, kPatternCount)(rng);
  const int count = std::uniform_int_distribution<int>(3, 6)(rng);
  std::vector<int> weeks(kWeeks);
  std::iota(weeks.begin(), weeks.end(), 1);
  std::shuffle(weeks.begin(), weeks.end(), rng);
  g.promo_weeks.assign(weeks.begin(), weeks.begin() + count);
  std::sort(g.promo_weeks.begin(), g.promo_weeks.end());
  std::uniform_int_distribution<int> level(0, 3);
  g.discounts.clear();
  g.p_promo.clear();
  for (int w = 0; w < count; ++w) {
    g.discounts.push_back(kDiscountLevels[level(rng)]);
    g.p_promo.push_back(p_promo_draw(g.discounts.back(), rng));
  }

  core::Entity e;
  e.id = "e" + std::to_string(i + 1);
  e.y.resize(kWeeks);
  e.X = Eigen::MatrixXd::Zero(kWeeks, 1 + kWeeks);
  e.weeks.resize(kWeeks);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double sd = g.S_A / cfg.noise_scale;
  std::size_t next_promo = 0;
  for (int t = 1; t <= kWeeks; ++t) {
    double demand = g.S_A;
    double discount = 0.0;
    if (next_promo < g.promo_weeks.size() && g.promo_weeks[next_promo] == t) {
      discount = g.discounts[next_promo];
      demand = g.S_A * (1.0 + g.p_promo[next_promo]);
      ++next_promo;
    }
    const double seasonal = g.S_A * seasonal_pattern(g.pattern, t);
    const double z = normal(rng);
    const double eps = std::isfinite(sd) && sd > 0.0 ? z * sd : 0.0;
    e.y[t - 1] = demand + seasonal + eps;
    e.X(t - 1, 0) = discount;
    e.X(t - 1, t) = 1.0;
    e.weeks[t - 1] = t;
  }
  return e;
}

}  // namespace

SyntheticInstance gen_type1(const SyntheticConfig& cfg) {
  check(cfg);
  SyntheticInstance inst;
  inst.type = 1;
  inst.config = cfg;
  inst.entities.resize(static_cast<std::size_t>(cfg.I));
  inst.ground.resize(static_cast<std::size_t>(cfg.I));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < cfg.I; ++i) inst.entities[i] = make_entity(cfg, i, 0, inst.ground[i]);
  return inst;
}

SyntheticInstance gen_type2(const SyntheticConfig& cfg) {
  check(cfg);
  if (cfg.K < 1) throw ContractError("gen_type2: K must be positive");
  if (static_cast<long>(cfg.I) < static_cast<long>(cfg.K) * cfg.min_cluster_size)
    throw InfeasibleError("gen_type2: I < K * min_cluster_size");

  SyntheticInstance inst;
  inst.type = 2;
  inst.config = cfg;
  auto rng = core::make_rng(cfg.seed, kClusterStream);
  if (!cfg.cluster_patterns.empty()) {
    if (static_cast<int>(cfg.cluster_patterns.size()) != cfg.K)
      throw ContractError("gen_type2: need one pattern per cluster");
    for (int p : cfg.cluster_patterns) seasonal_pattern(p, 1);  // range check
    inst.cluster_patterns = cfg.cluster_patterns;
  } else if (cfg.K <= kPatternCount) {
    std::vector<int> ids(kPatternCount);
    std::iota(ids.begin(), ids.end(), 1);
    std::shuffle(ids.begin(), ids.end(), rng);
    inst.cluster_patterns.assign(ids.begin(), ids.begin() + cfg.K);
  } else {
    std::uniform_int_distribution<int> pick(1, kPatternCount);
    for (int k = 0; k < cfg.K; ++k) inst.cluster_patterns.push_back(pick(rng));
  }

  std::uniform_int_distribution<int> pick_cluster(0, cfg.K - 1);
  std::vector<int> labels(static_cast<std::size_t>(cfg.I));
  bool ok = false;
  for (int attempt = 0; attempt < kAssignmentRetries && !ok; ++attempt) {
    std::vector<int> counts(static_cast<std::size_t>(cfg.K), 0);
    for (auto& l : labels) ++counts[l = pick_cluster(rng)];
    ok = *std::min_element(counts.begin(), counts.end()) >= cfg.min_cluster_size;
  }
  if (!ok)
    throw InfeasibleError("gen_type2: could not give every cluster " +
                          std::to_string(cfg.min_cluster_size) + " entities");

  inst.entities.resize(static_cast<std::size_t>(cfg.I));
  inst.ground.resize(static_cast<std::size_t>(cfg.I));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < cfg.I; ++i)
    inst.entities[i] = make_entity(cfg, i, inst.cluster_patterns[labels[i]], inst.ground[i]);
  inst.target = core::Partition(cfg.K, labels);
  return inst;
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  auto p = csv_path;
  p.replace_extension(".json");
  return p;
}

void write_instance(const SyntheticInstance& inst, const std::filesystem::path& path) {
  std::ofstream csv(path, std::ios::binary);
  if (!csv) throw Error("write_instance: cannot open " + path.string() + " for writing");
  core::write_dataset_csv(csv, inst.entities);
  csv.close();
  if (!csv) throw Error("write_instance: failed writing " + path.string());

  nlohmann::ordered_json j;
  j["type"] = inst.type;
  j["config"] = {{"I", inst.config.I},
                 {"K", inst.config.K},
                 {"L", inst.config.L},
                 {"seed", inst.config.seed},
                 {"noise_scale", std::isfinite(inst.config.noise_scale)
                                     ? nlohmann::ordered_json(inst.config.noise_scale)
                                     : nlohmann::ordered_json("inf")}};
  auto& ground = j["ground_params"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < inst.ground.size(); ++i) {
    const auto& g = inst.ground[i];
    ground.push_back({{"entity_id", inst.entities[i].id},
                      {"S_A", g.S_A},
                      {"pattern", g.pattern},
                      {"promo_weeks", g.promo_weeks},
                      {"discounts", g.discounts},
                      {"p_promo", g.p_promo}});
  }
  if (inst.target) {
    j["cluster_patterns"] = inst.cluster_patterns;
    auto& target = j["target"] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < inst.entities.size(); ++i)
      target[inst.entities[i].id] = (*inst.target)[i];
  }
  const auto side = sidecar_path(path);
  std::ofstream js(side, std::ios::binary);
  if (!js) throw Error("write_instance: cannot open " + side.string() + " for writing");
  js << j.dump(2) << '\n';
  if (!js) throw Error("write_instance: failed writing " + side.string());
}

}  // namespace gclr::synth
