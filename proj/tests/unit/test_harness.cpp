#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "gclr/core/errors.hpp"
#include "gclr/harness/experiment.hpp"
#include "gclr/harness/metrics.hpp"
#include "gclr/harness/records.hpp"
#include "gclr/harness/solvers.hpp"
#include "gclr/synth/generator.hpp"

using namespace gclr;
using namespace gclr::harness;
using nlohmann::json;

namespace {

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("gclr_harness_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

int run_cli(const std::string& args, const std::filesystem::path& cwd) {
  const std::string cmd = "cd '" + cwd.string() + "' && '" GCLR_CLI_PATH "' " + args + " >out.txt 2>err.txt";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

json small_config(const std::string& algo, int reps = 1) {
  return {{"instances", json::array({{{"generate", {{"type", 1}, {"I", 8}, {"seed", 3}}}}})},
          {"algorithms", json::array({algo})},
          {"K", json::array({2})},
          {"n", 2},
          {"repetitions", reps},
          {"time_limit", 60}};
}

}  // namespace

TEST_CASE("comparison metrics") {
  CHECK(relative_improvement(100, 100) == 0.0);
  CHECK(relative_improvement(120, 100) == doctest::Approx(0.20));
  CHECK(relative_improvement(100, 120) == doctest::Approx(-0.1667).epsilon(1e-3));
  CHECK_THROWS_AS(relative_improvement(1, 0), ContractError);
  CHECK(opt_gap(100, 100) == 0.0);
  CHECK(opt_gap(105, 100) == doctest::Approx(0.05));
  CHECK_THROWS_AS(opt_gap(1, -1), ContractError);
  CHECK(gap_from_best(100, {100, 105, 110}) == 0.0);
  CHECK(gap_from_best(110, {100, 105, 110}) == doctest::Approx(0.10));
  for (double v : {100.0, 105.0, 110.0}) CHECK(gap_from_best(v, {100, 105, 110}) >= 0.0);
  CHECK_THROWS_AS(gap_from_best(1, {}), ContractError);
}

TEST_CASE("CSV quoting") {
  CHECK(csv_quote("plain") == "plain");
  CHECK(csv_quote("a,b") == "\"a,b\"");
  CHECK(csv_quote("say \"x\"") == "\"say \"\"x\"\"\"");
  CHECK(csv_split("a,\"b,c\",\"d\"\"e\",") == std::vector<std::string>{"a", "b,c", "d\"e", ""});
}

TEST_CASE("records round-trip and re-scoring") {
  const auto d = fixtures::latent_dataset(6, 2, 2, 4);
  const core::Partition p(2, {0, 1, 0, 1, 1, 0});
  RunRecord r;
  r.instance_id = "inst, one";
  r.cell = "6_2";
  r.algorithm = "spaeth";
  r.K = 2;
  r.n = 2;
  r.seed = 7;
  r.params = R"({"a":1})";
  r.sse = core::partition_sse(d, p);
  r.wall_time_ms = 1.25;
  r.converged = true;
  r.labels = p.labels();
  RunRecord failed = r;
  failed.error = "boom: \"quoted\", with comma";
  failed.labels.clear();
  failed.sse = std::numeric_limits<double>::quiet_NaN();

  std::stringstream s;
  write_records_csv(s, {r, failed});
  const auto back = read_records_csv(s);
  REQUIRE(back.size() == 2);
  CHECK(back[0].instance_id == r.instance_id);
  CHECK(back[0].params == r.params);
  CHECK(back[0].sse == r.sse);
  CHECK(back[0].labels == r.labels);
  CHECK(back[0].seed == 7);
  CHECK(back[0].converged);
  CHECK(back[1].error == failed.error);
  CHECK(std::isnan(back[1].sse));
  verify_record(back[0], d);
  auto wrong = back[0];
  wrong.sse *= 1.001;
  CHECK_THROWS_AS(verify_record(wrong, d), ContractError);
}

TEST_CASE("FNV-1a reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("experiment config validation") {
  CHECK_NOTHROW(parse_experiment_config(small_config("cg")));
  auto bad = small_config("cg");
  bad["repetitions"] = 0;
  CHECK_THROWS_AS(parse_experiment_config(bad), ContractError);
  bad = small_config("cg");
  bad["time_limit"] = 0;
  CHECK_THROWS_AS(parse_experiment_config(bad), ContractError);
  CHECK_THROWS_AS(parse_experiment_config(small_config("simulated-annealing")), ContractError);
  bad = small_config("cg");
  bad.erase("instances");
  CHECK_THROWS_AS(parse_experiment_config(bad), ContractError);
  const auto cfg = parse_experiment_config(small_config("cg"));
  CHECK(cfg.instances.front().id == "gen1_I8_K2_s3");
}

TEST_CASE("run_experiment: one cell, determinism, traces") {
  const auto one = run_experiment(parse_experiment_config(small_config("ga-lloyd")));
  REQUIRE(one.records.size() == 1);
  CHECK(one.records[0].cell == "8_2");
  CHECK(one.records[0].error.empty());

  auto cfg_json = small_config("spaeth", 3);
  cfg_json["algorithms"] = json::array({"cg", "ga-lloyd", "spaeth", "two-stage", "cg-heur"});
  cfg_json["algorithms"][4] = {{"name", "cg-heur"}, {"params", {{"groups", 4}}}};
  cfg_json["workers"] = 2;
  const auto cfg = parse_experiment_config(cfg_json);
  const auto a = run_experiment(cfg);
  const auto b = run_experiment(cfg);
  REQUIRE(a.records.size() == 15);
  REQUIRE(b.records.size() == 15);
  const auto inst = synth::gen_type1(*cfg.instances[0].gen);
  const auto d = inst.dataset(2, 2);
  for (std::size_t t = 0; t < a.records.size(); ++t) {
    CAPTURE(a.records[t].algorithm);
    CHECK(a.records[t].error.empty());
    CHECK(a.records[t].sse == b.records[t].sse);
    CHECK(a.records[t].labels == b.records[t].labels);
    CHECK(a.records[t].algorithm == b.records[t].algorithm);
    verify_record(a.records[t], d);
  }
  // Traces are monotone per run.
  std::map<std::tuple<std::string, std::uint64_t>, double> last;
  for (const auto& p : a.traces) {
    const auto key = std::make_tuple(p.algorithm, p.seed);
    if (last.count(key)) CHECK(p.sse < last[key]);
    last[key] = p.sse;
  }
  CHECK_FALSE(last.empty());
}

TEST_CASE("run_experiment records failures in-row and honours the time limit") {
  auto j = small_config("brute");
  j["instances"] = json::array({{{"generate", {{"type", 1}, {"I", 30}, {"seed", 1}}}}});
  j["algorithms"] = json::array({"brute", "ga-lloyd"});
  j["K"] = json::array({5});
  const auto out = run_experiment(parse_experiment_config(j));
  REQUIRE(out.records.size() == 2);
  CHECK(out.records[0].error.find("guard") != std::string::npos);
  CHECK(out.records[1].error.empty());

  auto slow = small_config("ga-lloyd");
  slow["time_limit"] = 1e-9;
  const auto timed = run_experiment(parse_experiment_config(slow));
  REQUIRE(timed.records.size() == 1);
  CHECK_FALSE(timed.records[0].converged);
  CHECK(timed.records[0].error.empty());
  CHECK(timed.records[0].labels.size() == 8);

  auto missing = small_config("cg");
  missing["instances"] = json::array({"does-not-exist.csv"});
  const auto m = run_experiment(parse_experiment_config(missing));
  REQUIRE(m.records.size() == 1);
  CHECK_FALSE(m.records[0].error.empty());
}

TEST_CASE("experiment outputs: records, traces, manifest") {
  const auto dir = temp_dir("outputs");
  const auto j = small_config("spaeth");
  const auto out = run_experiment(parse_experiment_config(j));
  write_experiment_outputs(out, j, dir);
  std::ifstream rf(dir / "records.csv");
  CHECK(read_records_csv(rf).size() == 1);
  CHECK(slurp(dir / "traces.csv").rfind("instance_id,algorithm,K,seed,elapsed_ms,sse", 0) == 0);
  const auto manifest = json::parse(slurp(dir / "manifest.json"));
  CHECK(manifest.at("version") == "0.1.0");
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a64(j.dump())));
  CHECK(manifest.at("config_hash") == std::string("fnv1a64:") + hash);
  std::filesystem::remove_all(dir);
}

TEST_CASE("run_algorithm parameter checking") {
  const auto d = fixtures::latent_dataset(8, 2, 2, 1);
  const core::CostModel costs(d);
  core::RunControl rc;
  CHECK_THROWS_AS(run_algorithm("ga-lloyd", costs, {{"groups", 3}}, 1, rc), ContractError);
  CHECK_THROWS_AS(run_algorithm("nope", costs, json::object(), 1, rc), ContractError);
  const auto r = run_algorithm("ga-lloyd", costs, {{"pop_size", 4}, {"max_stall", 5}}, 1, rc);
  CHECK(core::validate_partition(r.partition, d).empty());
  const auto cg = run_algorithm("cg", costs, json::object(), 1, rc);
  CHECK(cg.details.contains("lp_objective"));
  CHECK(cg.details.contains("column_pool_size"));
}

TEST_CASE("command line interface") {
  const auto dir = temp_dir("cli");
  CHECK(run_cli("gen --type 2 --entities 10 --k 2 --seed 4 --out inst.csv", dir) == 0);
  CHECK(std::filesystem::exists(dir / "inst.csv"));
  CHECK(std::filesystem::exists(dir / "inst.json"));

  CHECK(run_cli("solve --algo cg --k 2 --n 2 --seed 1 --time-limit 60 --in inst.csv --out cg.json", dir) == 0);
  const auto doc = json::parse(slurp(dir / "cg.json"));
  for (const char* key : {"objective", "lp_objective", "iterations", "integral", "wall_time_ms",
                          "partition", "column_pool_size"})
    CHECK(doc.contains(key));
  CHECK(doc.at("partition").size() == 10);
  CHECK(doc.at("integral") == true);

  CHECK(run_cli("ga-lloyd --k 2 --n 2 --seed 3 --pop-size 6 --max-stall 10 --in inst.csv --out ga.json", dir) == 0);
  const auto ga = json::parse(slurp(dir / "ga.json"));
  CHECK(ga.at("objective").get<double>() >= doc.at("objective").get<double>() * (1 - 1e-9));
  CHECK(run_cli("two-stage --k 2 --n 2 --discount-col 0 --in inst.csv", dir) == 0);
  CHECK(run_cli("cg-heur --k 2 --n 2 --groups 4 --in inst.csv", dir) == 0);

  // Input errors.
  CHECK(run_cli("solve --algo cg --in missing.csv", dir) == 2);
  CHECK(run_cli("solve --algo magic --in inst.csv", dir) == 2);
  CHECK(run_cli("solve --algo cg --k 6 --n 2 --in inst.csv", dir) == 2);
  CHECK(run_cli("spaeth --in inst.csv --pop-size 3", dir) == 2);
  // Stopped by the time limit.
  CHECK(run_cli("ga-lloyd --k 2 --time-limit 1e-9 --in inst.csv", dir) == 3);

  std::ofstream(dir / "cfg.json") << small_config("spaeth", 2).dump();
  CHECK(run_cli("bench --config cfg.json --out res", dir) == 0);
  CHECK(std::filesystem::exists(dir / "res" / "records.csv"));
  CHECK(std::filesystem::exists(dir / "res" / "manifest.json"));
  CHECK(run_cli("metrics --records res/records.csv --config cfg.json", dir) == 0);
  CHECK(slurp(dir / "out.txt").rfind("instance_id,cell,algorithm,K,seed,sse,opt_gap,gap_from_best", 0) == 0);
  std::ofstream(dir / "broken.json") << "{not json";
  CHECK(run_cli("bench --config broken.json", dir) == 2);
  std::filesystem::remove_all(dir);
}
