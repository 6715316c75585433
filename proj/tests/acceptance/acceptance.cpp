// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// The synthetic grid is solved once and shared by criteria 3 to 6.

#include <algorithm>
#include <array>
#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gclr/core/cost_model.hpp"
#include "gclr/core/ols.hpp"
#include "gclr/core/partition.hpp"
#include "gclr/core/random.hpp"
#include "gclr/exact/brute_force.hpp"
#include "gclr/exact/column_generation.hpp"
#include "gclr/exact/pricing.hpp"
#include "gclr/exact/units.hpp"
#include "gclr/harness/metrics.hpp"
#include "gclr/harness/solvers.hpp"
#include "gclr/heuristics/cg_heuristic.hpp"
#include "gclr/heuristics/ga_lloyd.hpp"
#include "gclr/heuristics/spaeth.hpp"
#include "gclr/heuristics/two_stage.hpp"
#include "gclr/synth/generator.hpp"

using namespace gclr;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kSeedsPerRun = 5;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

void progress(const std::string& s) { std::cerr << s << std::endl; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Invariants gathered from every run in this binary.
struct Invariants {
  std::size_t partitions_checked = 0;
  std::size_t invalid_partitions = 0;
  std::size_t spaeth_runs = 0;
  std::size_t spaeth_non_descent = 0;
  double worst_certificate = kInf;
  std::size_t certificates = 0;

  void check(const core::Partition& p, const core::Dataset& d) {
    ++partitions_checked;
    if (!core::validate_partition(p, d).empty()) ++invalid_partitions;
  }
  void certify(const exact::UnitProblem& problem, const exact::CgResult& cg) {
    const auto best = exact::pricing_enumerate(problem, cg.pi, cg.upsilon);
    worst_certificate = std::min(worst_certificate, best.reduced_cost / cg.cost_scale);
    ++certificates;
  }
  void spaeth(const heuristics::SpaethResult& r) {
    ++spaeth_runs;
    for (std::size_t t = 1; t < r.sse_after_move.size(); ++t)
      if (!(r.sse_after_move[t] < r.sse_after_move[t - 1])) {
        ++spaeth_non_descent;
        break;
      }
  }
};
Invariants inv;

// ---------------------------------------------------------------- criterion 1

Outcome exactness() {
  int agree = 0, integral = 0;
  double worst = 0.0;
  std::ostringstream bad;
  for (int idx = 0; idx < 20; ++idx) {
    const int type = 1 + idx % 2;
    const int I = std::array{6, 8, 10}[idx % 3];
    const int K = 2 + (idx / 3) % 2;
    const int n = 1 + (idx / 6) % 2;
    synth::SyntheticConfig cfg;
    cfg.I = I;
    cfg.K = K;
    cfg.seed = 1000 + static_cast<std::uint64_t>(idx);
    cfg.min_cluster_size = n;
    const auto inst = type == 1 ? synth::gen_type1(cfg) : synth::gen_type2(cfg);
    const core::CostModel costs(inst.dataset(K, n, {n == 1}));
    const exact::UnitProblem problem(costs);
    const auto bf = exact::brute_force_optimum(problem);
    const auto cg = exact::run_cg(costs, cfg.seed);
    inv.check(cg.partition, costs.dataset());
    inv.check(bf.partition, costs.dataset());
    inv.certify(problem, cg);
    const double rel = std::abs(cg.objective - bf.sse) / std::max(std::abs(bf.sse), 1e-300);
    worst = std::max(worst, rel);
    agree += rel <= 1e-6;
    integral += cg.integral;
    if (rel > 1e-6 || !cg.integral)
      bad << " [type " << type << " I=" << I << " K=" << K << " n=" << n << "]";
  }
  return {agree == 20 && integral == 20,
          std::to_string(agree) + "/20 within 1e-6, " + std::to_string(integral) +
              "/20 integral, worst rel diff " + fmt("%.2e", worst) + bad.str()};
}

// ---------------------------------------------------------------- criterion 2

Outcome pricing_exactness() {
  int agree = 0;
  double worst = 0.0;
  std::mt19937_64 rng(2024);
  for (int p = 0; p < 200; ++p) {
    const int I = 4 + p % 9;
    const auto seed = static_cast<std::uint64_t>(p + 1);
    std::vector<core::Entity> es;
    int K = 2 + p % 3, n = 1 + (p / 9) % 2;
    if (p % 2 == 0) {
      synth::SyntheticConfig cfg;
      cfg.I = I;
      cfg.K = 2;
      cfg.seed = seed;
      es = (p % 4 == 0 ? synth::gen_type1(cfg) : synth::gen_type2(cfg)).entities;
    } else {
      es = fixtures::latent_entities(static_cast<std::size_t>(I), 5, 2, 3, 1.0, seed);
      n = 1 + (p / 9) % 3;
    }
    K = std::min(K, I / n);
    const core::CostModel costs(core::Dataset(es, K, n, {true}));
    const exact::UnitProblem problem(costs);
    const double scale = costs.total_sum_squares() / I;
    std::normal_distribution<double> N(0.0, scale * (0.2 + 0.1 * (p % 10)));
    Eigen::VectorXd pi(I);
    for (auto& v : pi) v = N(rng);
    const double ups = -0.3 * scale;
    const auto e = exact::pricing_enumerate(problem, pi, ups);
    exact::PricingOptions gram;
    gram.gram_bound = true;
    gram.gram_bound_min_undecided = 2;
    bool ok = true;
    for (const auto& b : {exact::solve_pricing_bnb(problem, pi, ups), exact::solve_pricing_bnb(problem, pi, ups, gram)}) {
      double members_pi = 0.0;
      b.members.for_each([&](std::size_t i) { members_pi += pi[static_cast<Eigen::Index>(i)]; });
      const double set_value = problem.cost(b.members) - ups - members_pi;
      const double norm = std::max(std::abs(e.reduced_cost), 1.0);
      const double diff = std::max(std::abs(b.reduced_cost - e.reduced_cost), std::abs(set_value - e.reduced_cost)) / norm;
      worst = std::max(worst, diff);
      ok = ok && b.proven && diff <= 1e-8 && static_cast<int>(b.members.size()) >= n;
    }
    agree += ok;
  }
  return {agree == 200, std::to_string(agree) + "/200 pairs agree, worst rel diff " + fmt("%.2e", worst)};
}

// ------------------------------------------------------------ synthetic grid

struct GridCase {
  int type = 1, I = 0, K = 0;
  std::uint64_t seed = 0;
  double opt = kInf;
  bool proven = false;
  double ga = kInf, spaeth = kInf, two_stage = kInf, target = kInf;
  bool heuristic_below_optimum = false;
};

std::vector<GridCase> grid;

// Every partition is re-scored by the same cost model, so identical
// partitions compare equal across algorithms.
void solve_case(GridCase& c, const synth::SyntheticInstance& inst) {
  const core::CostModel costs(inst.dataset(c.K, 2));
  const auto& d = costs.dataset();
  auto score = [&](const core::Partition& p) {
    inv.check(p, d);
    return core::partition_sse(costs, p);
  };
  for (int s = 1; s <= kSeedsPerRun; ++s) {
    heuristics::GaParams gp;
    gp.seed = static_cast<std::uint64_t>(s);
    c.ga = std::min(c.ga, score(heuristics::run_ga_lloyd(d, gp).partition));
    const auto sp = heuristics::run_spaeth(costs, static_cast<std::uint64_t>(s));
    inv.spaeth(sp);
    c.spaeth = std::min(c.spaeth, score(sp.partition));
  }
  if (c.type == 1)
    c.two_stage = score(heuristics::run_two_stage(d).partition);
  else
    c.target = score(*inst.target);
  if (c.K <= 4) {
    const auto cg = exact::run_cg(costs, 1);
    c.proven = cg.converged && cg.integral;
    const double cg_sse = score(cg.partition);
    const double best_heur = std::min(c.ga, c.spaeth);
    c.heuristic_below_optimum = c.proven && best_heur < cg_sse * (1 - 1e-9);
    c.opt = std::min(cg_sse, best_heur);
  }
}

void build_grid() {
  const auto t0 = std::chrono::steady_clock::now();
  for (int I : {15, 20}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      synth::SyntheticConfig cfg;
      cfg.I = I;
      cfg.seed = seed;
      const auto inst = synth::gen_type1(cfg);
      for (int K = 2; K <= 5; ++K) {
        GridCase c{1, I, K, seed};
        solve_case(c, inst);
        grid.push_back(c);
      }
    }
    for (int K = 2; K <= 4; ++K) {
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        synth::SyntheticConfig cfg;
        cfg.I = I;
        cfg.K = K;
        cfg.seed = seed;
        cfg.min_cluster_size = 2;
        GridCase c{2, I, K, seed};
        solve_case(c, synth::gen_type2(cfg));
        grid.push_back(c);
      }
    }
    progress("grid I=" + std::to_string(I) + " done after " + fmt("%.0f s", seconds_since(t0)));
  }
}

template <class Pred>
std::vector<const GridCase*> select(Pred pred) {
  std::vector<const GridCase*> out;
  for (const auto& c : grid)
    if (pred(c)) out.push_back(&c);
  return out;
}

double mean_gap(const std::vector<const GridCase*>& cases, double GridCase::*field) {
  double s = 0.0;
  for (const auto* c : cases) s += harness::opt_gap(c->*field, c->opt);
  return s / static_cast<double>(cases.size());
}

std::string grid_notes() {
  int unproven = 0, below = 0;
  for (const auto& c : grid) {
    if (c.K > 4) continue;
    unproven += !c.proven;
    below += c.heuristic_below_optimum;
  }
  std::string s;
  if (unproven) s += ", " + std::to_string(unproven) + " CG runs not certified";
  if (below) s += ", " + std::to_string(below) + " heuristic results below a certified optimum";
  return s;
}

// ---------------------------------------------------------------- criterion 3

Outcome ga_band() {
  std::ostringstream cells;
  int over5 = 0, over8 = 0;
  for (int type : {1, 2})
    for (int I : {15, 20})
      for (int K = 2; K <= 4; ++K) {
        const auto cases = select([&](const GridCase& c) { return c.type == type && c.I == I && c.K == K; });
        const double g = mean_gap(cases, &GridCase::ga);
        over5 += g > 0.05;
        over8 += g > 0.08;
        cells << " t" << type << ":" << I << "_" << K << "=" << fmt("%.2f%%", 100 * g);
      }
  return {over8 == 0 && over5 <= 1,
          "mean OptGap of best-of-5 GA-Lloyd per cell:" + cells.str() + grid_notes()};
}

// ---------------------------------------------------------------- criterion 4

Outcome spaeth_band() {
  const auto k2 = select([](const GridCase& c) { return c.type == 1 && c.K == 2; });
  const auto k4 = select([](const GridCase& c) { return c.type == 1 && c.K == 4; });
  const double sp2 = mean_gap(k2, &GridCase::spaeth), ga2 = mean_gap(k2, &GridCase::ga);
  const double sp4 = mean_gap(k4, &GridCase::spaeth);
  return {sp2 <= ga2 && sp4 > sp2,
          "K=2: Spaeth " + fmt("%.3f%%", 100 * sp2) + " vs GA-Lloyd " + fmt("%.3f%%", 100 * ga2) +
              "; Spaeth K=4 " + fmt("%.3f%%", 100 * sp4)};
}

// ---------------------------------------------------------------- criterion 5

Outcome target_gap() {
  const std::map<std::pair<int, int>, double> table{{{15, 2}, 0.051}, {{15, 3}, 0.073}, {{15, 4}, 0.129},
                                                    {{20, 2}, 0.063}, {{20, 3}, 0.069}, {{20, 4}, 0.093}};
  std::ostringstream cells;
  bool ok = true;
  for (const auto& [key, ref] : table) {
    const auto cases = select([&](const GridCase& c) { return c.type == 2 && c.I == key.first && c.K == key.second; });
    const double g = mean_gap(cases, &GridCase::target);
    const bool in = std::abs(g - ref) <= 0.05;
    ok = ok && in;
    cells << " " << key.first << "_" << key.second << "=" << fmt("%.1f%%", 100 * g) << " (ref "
          << fmt("%.1f%%", 100 * ref) << (in ? ")" : ", out)");
  }
  return {ok, "mean target gap:" + cells.str()};
}

// ---------------------------------------------------------------- criterion 6

Outcome two_stage_direction() {
  const auto cells = select([](const GridCase& c) { return c.type == 1; });
  int positive = 0;
  double lo = kInf, hi = -kInf;
  for (const auto* c : cells) {
    const double ri = harness::relative_improvement(c->two_stage, c->ga);
    positive += ri > 0;
    lo = std::min(lo, ri);
    hi = std::max(hi, ri);
  }
  const double share = static_cast<double>(positive) / static_cast<double>(cells.size());
  return {share >= 0.9, std::to_string(positive) + "/" + std::to_string(cells.size()) +
                            " cells with RI > 0, RI range [" + fmt("%.3f", lo) + ", " + fmt("%.3f", hi) + "]"};
}

// ---------------------------------------------------------------- criterion 7

Outcome properties() {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  // Huygen identity.
  {
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto es = fixtures::identity_entities(7, 4, seed);
      const core::Dataset d(es, 1, 1, {true});
      for (unsigned m = 1; m < 128; ++m) {
        core::EntitySet S(7);
        for (int i = 0; i < 7; ++i)
          if (m >> i & 1) S.insert(static_cast<std::size_t>(i));
        if (S.size() < 2) continue;
        double pairs = 0.0;
        S.for_each([&](std::size_t i) {
          S.for_each([&](std::size_t j) { pairs += (es[i].y - es[j].y).squaredNorm(); });
        });
        const double lhs = 2.0 * static_cast<double>(S.size()) * core::cluster_cost(d, S).sse;
        worst = std::max(worst, std::abs(lhs - pairs) / std::max(std::abs(pairs), 1e-300));
      }
    }
    expect(worst <= 1e-8, "Huygen identity (worst " + fmt("%.2e", worst) + ")");
  }

  // Subset monotonicity over all subsets of 8 entities.
  for (std::uint64_t seed : {1u, 2u}) {
    const auto es = seed == 1 ? fixtures::latent_entities(8, 5, 2, 2, 1.0, 31)
                              : synth::gen_type1([] {
                                  synth::SyntheticConfig cfg;
                                  cfg.I = 8;
                                  cfg.seed = 31;
                                  return cfg;
                                }()).entities;
    const core::CostModel costs(core::Dataset(es, 1, 1, {true}));
    std::vector<double> c(256, 0.0);
    for (unsigned m = 1; m < 256; ++m) {
      core::EntitySet S(8);
      for (int i = 0; i < 8; ++i)
        if (m >> i & 1) S.insert(static_cast<std::size_t>(i));
      c[m] = costs.sse(S);
    }
    std::size_t violations = 0;
    for (unsigned a = 1; a < 256; ++a)
      for (unsigned b = a; b < 256; ++b)
        if ((a & b) == a && c[a] > c[b] + 1e-9 * std::max(1.0, c[b])) ++violations;
    expect(violations == 0, "subset monotonicity (" + std::to_string(violations) + " violations)");
  }

  // OLS residual orthogonality.
  {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> N(0.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const int rows = 10 + t % 40, cols = 1 + t % 8;
      Eigen::MatrixXd X(rows, cols);
      for (auto& v : X.reshaped()) v = N(rng);
      if (t % 5 == 0 && cols > 1) X.col(cols - 1) = X.col(0);  // rank deficient
      Eigen::VectorXd y(rows);
      for (auto& v : y) v = 10 * N(rng);
      const auto fit = core::fit_ols(X, y);
      const Eigen::VectorXd g = X.transpose() * (y - X * fit.beta);
      worst = std::max(worst, g.norm() / (X.transpose() * y).norm());
    }
    expect(worst <= 1e-8, "OLS orthogonality (worst " + fmt("%.2e", worst) + ")");
  }

  // CG certificates at I = 12, on top of those from criterion 1.
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    synth::SyntheticConfig cfg;
    cfg.I = 12;
    cfg.K = 2 + static_cast<int>(seed % 2);
    cfg.seed = 500 + seed;
    const auto inst = seed % 2 ? synth::gen_type1(cfg) : synth::gen_type2(cfg);
    const core::CostModel costs(inst.dataset(cfg.K, 2));
    const exact::UnitProblem problem(costs);
    const auto cg = exact::run_cg(costs, seed);
    inv.check(cg.partition, costs.dataset());
    inv.certify(problem, cg);
  }
  expect(inv.worst_certificate >= -1e-7,
         "CG certificate (worst " + fmt("%.2e", inv.worst_certificate) + ")");

  // Group phase strict descent.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    synth::SyntheticConfig cfg;
    cfg.I = 20;
    cfg.seed = seed;
    const auto d = synth::gen_type1(cfg).dataset(2, 2);
    const auto g = heuristics::group_phase(d, 8, seed);
    for (std::size_t t = 1; t < g.sse_history.size(); ++t)
      if (!(g.sse_history[t] < g.sse_history[t - 1])) {
        expect(false, "group phase descent (seed " + std::to_string(seed) + ")");
        break;
      }
  }
  expect(inv.spaeth_non_descent == 0, "Spaeth descent (" + std::to_string(inv.spaeth_non_descent) + " runs)");
  expect(inv.invalid_partitions == 0, "partition validity (" + std::to_string(inv.invalid_partitions) + " invalid)");

  // Crossover conservation and mutation containment.
  {
    auto rng = core::make_rng(11);
    std::normal_distribution<double> N(0.0, 5.0);
    int bad_cross = 0, bad_mut = 0;
    for (int t = 0; t < 2000; ++t) {
      const int len = 2 + t % 30;
      Eigen::VectorXd a(len), b(len);
      for (auto& v : a) v = N(rng);
      for (auto& v : b) v = N(rng);
      if (t % 7 == 0) a[0] = 0.0;
      const auto [x, y] = heuristics::crossover(a, b, rng);
      for (Eigen::Index j = 0; j < len; ++j) {
        const bool straight = x[j] == a[j] && y[j] == b[j];
        const bool swapped = x[j] == b[j] && y[j] == a[j];
        bad_cross += !(straight || swapped);
      }
      bad_cross += x.head(1) != a.head(1) || x.tail(1) != b.tail(1);
      const auto m = heuristics::mutate(a, 1.0, rng);
      int changed = 0;
      for (Eigen::Index j = 0; j < len; ++j) {
        if (m[j] == a[j]) continue;
        ++changed;
        const double lo = a[j] == 0.0 ? -2.0 : std::min(-a[j], 3 * a[j]);
        const double hi = a[j] == 0.0 ? 2.0 : std::max(-a[j], 3 * a[j]);
        bad_mut += !(m[j] >= lo && m[j] <= hi);
      }
      bad_mut += changed > 1;
    }
    expect(bad_cross == 0, "crossover conservation");
    expect(bad_mut == 0, "mutation range");
  }

  // Roulette frequencies.
  {
    auto rng = core::make_rng(13);
    const std::vector<double> f{1, 2, 3, 4, 5, 6, 7, 8};
    const double total = 36.0;
    std::vector<int> c(f.size(), 0);
    const int draws = 50000;
    for (int t = 0; t < draws; ++t) {
      const auto [a, b] = heuristics::roulette_select(f, rng);
      ++c[a];
      ++c[b];
    }
    double chi2 = 0.0;
    for (std::size_t h = 0; h < f.size(); ++h) {
      const double e = 2.0 * draws * f[h] / total;
      chi2 += (c[h] - e) * (c[h] - e) / e;
    }
    const boost::math::chi_squared dist(static_cast<double>(f.size() - 1));
    const double critical = boost::math::quantile(boost::math::complement(dist, 0.01));
    expect(chi2 <= critical, "roulette chi-square " + fmt("%.2f", chi2) + " > " + fmt("%.2f", critical));
  }

  std::string detail = std::to_string(inv.partitions_checked) + " partitions validated, " +
                       std::to_string(inv.spaeth_runs) + " Spaeth runs, " + std::to_string(inv.certificates) +
                       " CG certificates (worst " + fmt("%.2e", inv.worst_certificate) + ")";
  for (const auto& f : failures) detail += "; failed: " + f;
  return {failures.empty(), detail};
}

// ---------------------------------------------------------------- criterion 8

Outcome determinism() {
  int triples = 0, identical = 0;
  auto compare = [&](const core::CostModel& costs, const std::string& algo, const nlohmann::json& params,
                     std::uint64_t seed) {
    core::RunControl rc1, rc2;
    const auto a = harness::run_algorithm(algo, costs, params, seed, rc1);
    const auto b = harness::run_algorithm(algo, costs, params, seed, rc2);
    inv.check(a.partition, costs.dataset());
    ++triples;
    identical += std::memcmp(&a.sse, &b.sse, sizeof(double)) == 0 && a.partition.labels() == b.partition.labels();
  };
  {
    synth::SyntheticConfig cfg;
    cfg.I = 10;
    cfg.K = 3;
    cfg.seed = 77;
    const core::CostModel costs(synth::gen_type2(cfg).dataset(3, 2));
    for (const auto& algo : harness::algorithm_names())
      for (std::uint64_t seed : {1u, 9u})
        compare(costs, algo, algo == "cg-heur" ? nlohmann::json{{"groups", 6}} : nlohmann::json::object(), seed);
  }
  {
    synth::SyntheticConfig cfg;
    cfg.I = 40;
    cfg.seed = 78;
    const core::CostModel costs(synth::gen_type1(cfg).dataset(4, 3));
    for (const char* algo : {"ga-lloyd", "spaeth", "two-stage"})
      for (std::uint64_t seed : {1u, 2u, 3u}) compare(costs, algo, nlohmann::json::object(), seed);
    compare(costs, "ga-lloyd", {{"literal_replacement", true}, {"mutation_prob", 0.2}}, 4);
  }
  // Re-run the first grid case with the same seeds.
  if (!grid.empty()) {
    const auto& c = grid.front();
    synth::SyntheticConfig cfg;
    cfg.I = c.I;
    cfg.seed = c.seed;
    const core::CostModel costs(synth::gen_type1(cfg).dataset(c.K, 2));
    double ga = kInf;
    for (int s = 1; s <= kSeedsPerRun; ++s) {
      heuristics::GaParams gp;
      gp.seed = static_cast<std::uint64_t>(s);
      ga = std::min(ga, core::partition_sse(costs, heuristics::run_ga_lloyd(costs.dataset(), gp).partition));
    }
    ++triples;
    identical += ga == c.ga;
  }
  return {identical == triples, std::to_string(identical) + "/" + std::to_string(triples) + " re-runs bit-identical"};
}

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  std::map<int, Outcome> results;
  results[1] = guarded(exactness);
  progress("criterion 1 finished after " + fmt("%.0f s", seconds_since(t0)));
  results[2] = guarded(pricing_exactness);
  progress("criterion 2 finished after " + fmt("%.0f s", seconds_since(t0)));
  try {
    build_grid();
  } catch (const std::exception& e) {
    const Outcome failed{false, std::string("grid failed: ") + e.what()};
    results[3] = results[4] = results[5] = results[6] = failed;
  }
  if (!results.count(3)) {
    results[3] = guarded(ga_band);
    results[4] = guarded(spaeth_band);
    results[5] = guarded(target_gap);
    results[6] = guarded(two_stage_direction);
  }
  results[8] = guarded(determinism);
  results[7] = guarded(properties);

  const std::map<int, const char*> titles{
      {1, "CG equals brute force"},        {2, "pricing B&B equals enumeration"},
      {3, "GA-Lloyd optimality gap band"}, {4, "Spaeth behaviour band"},
      {5, "target solution gap"},          {6, "two-stage direction"},
      {7, "property suites"},              {8, "determinism"}};
  int failed = 0;
  for (const auto& [id, r] : results) {
    std::printf("criterion %d %s: %s: %s\n", id, r.pass ? "PASS" : "FAIL", titles.at(id), r.detail.c_str());
    failed += !r.pass;
  }
  std::printf("total time %.0f s\n", seconds_since(t0));
  return failed == 0 ? 0 : 1;
}
