#include "gclr/exact/brute_force.hpp"

#include <limits>

#include "gclr/core/errors.hpp"

namespace gclr::exact {

double stirling2(std::size_t m, std::size_t k) {
  if (k > m) return 0.0;
  std::vector<double> row(k + 1, 0.0);
  row[0] = 1.0;  // S(0, 0)
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = std::min(i, k); j >= 1; --j) {
      row[j] = static_cast<double>(j) * row[j] + row[j - 1];
      if (j == 1) row[0] = 0.0;
    }
  return row[k];
}

namespace {

struct Enumerator {
  const UnitProblem& problem;
  std::size_t R;
  int K;
  int n;
  std::vector<int> labels;
  std::vector<EntitySet> blocks;
  std::vector<int> block_weight;
  std::vector<int> suffix_w;
  int opened = 0;
  std::vector<int> best_labels;
  double best = std::numeric_limits<double>::infinity();
  std::size_t evaluated = 0;

  explicit Enumerator(const UnitProblem& p)
      : problem(p), R(p.size()), K(p.K()), n(p.n()), labels(R, -1),
        blocks(static_cast<std::size_t>(K), EntitySet(R)),
        block_weight(static_cast<std::size_t>(K), 0), suffix_w(R + 1, 0) {
    for (std::size_t t = R; t-- > 0;) suffix_w[t] = suffix_w[t + 1] + p.weight(t);
  }

  // Remaining weight must cover every open block's deficit plus n for each
  // block still to be opened.
  bool can_finish(std::size_t pos) const {
    int need = (K - opened) * n;
    if (static_cast<int>(R - pos) < K - opened) return false;
    for (int k = 0; k < opened; ++k) need += std::max(0, n - block_weight[k]);
    return need <= suffix_w[pos];
  }

  void place(std::size_t pos, int k) {
    labels[pos] = k;
    blocks[k].insert(pos);
    block_weight[k] += problem.weight(pos);
    if (k == opened) ++opened;
  }
  void unplace(std::size_t pos, int k) {
    blocks[k].erase(pos);
    block_weight[k] -= problem.weight(pos);
    if (k == opened - 1 && blocks[k].empty()) --opened;
    labels[pos] = -1;
  }

  void run(std::size_t pos) {
    if (!can_finish(pos)) return;
    if (pos == R) {
      ++evaluated;
      double total = 0.0;
      for (int k = 0; k < K; ++k) total += problem.cost(blocks[k]);
      if (total < best) {
        best = total;
        best_labels = labels;
      }
      return;
    }
    const int limit = std::min(opened + 1, K);
    for (int k = 0; k < limit; ++k) {
      place(pos, k);
      run(pos + 1);
      unplace(pos, k);
    }
  }
};

void check_guard(const UnitProblem& problem, double max_partitions) {
  const double count = stirling2(problem.size(), static_cast<std::size_t>(problem.K()));
  if (count > max_partitions)
    throw RefusalError("brute_force_optimum: " + std::to_string(count) +
                             " partitions exceed the guard of " + std::to_string(max_partitions));
  if (count == 0.0) throw InfeasibleError("brute_force_optimum: fewer units than clusters");
}

BruteForceResult finish(const UnitProblem& problem, const std::vector<int>& labels, double sse,
                        std::size_t evaluated) {
  if (labels.empty()) throw InfeasibleError("brute_force_optimum: no feasible partition");
  BruteForceResult out;
  out.clusters.assign(static_cast<std::size_t>(problem.K()), EntitySet(problem.size()));
  for (std::size_t r = 0; r < labels.size(); ++r) out.clusters[labels[r]].insert(r);
  out.partition = problem.to_partition(out.clusters);
  out.sse = sse;
  out.evaluated = evaluated;
  return out;
}

// Every valid restricted-growth prefix of the given length, in enumeration order.
void prefixes(std::size_t len, int K, std::vector<int>& cur, int opened,
              std::vector<std::vector<int>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k < std::min(opened + 1, K); ++k) {
    cur.push_back(k);
    prefixes(len, K, cur, std::max(opened, k + 1), out);
    cur.pop_back();
  }
}

}  // namespace

BruteForceResult brute_force_optimum_serial(const UnitProblem& problem, double max_partitions) {
  check_guard(problem, max_partitions);
  Enumerator e(problem);
  e.run(0);
  return finish(problem, e.best_labels, e.best, e.evaluated);
}

BruteForceResult brute_force_optimum(const UnitProblem& problem, double max_partitions) {
  check_guard(problem, max_partitions);
  const std::size_t len = std::min<std::size_t>(problem.size(), 6);
  std::vector<std::vector<int>> starts;
  std::vector<int> cur;
  prefixes(len, problem.K(), cur, 0, starts);

  std::vector<double> best(starts.size(), std::numeric_limits<double>::infinity());
  std::vector<std::vector<int>> best_labels(starts.size());
  std::vector<std::size_t> evaluated(starts.size(), 0);
  const auto m = static_cast<std::ptrdiff_t>(starts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t s = 0; s < m; ++s) {
    Enumerator e(problem);
    for (std::size_t pos = 0; pos < len; ++pos) e.place(pos, starts[s][pos]);
    e.run(len);
    best[s] = e.best;
    best_labels[s] = std::move(e.best_labels);
    evaluated[s] = e.evaluated;
  }
  // Reduce in prefix order with strict improvement: same winner as the serial scan.
  std::size_t total = 0;
  std::ptrdiff_t win = -1;
  for (std::ptrdiff_t s = 0; s < m; ++s) {
    total += evaluated[s];
    if (!best_labels[s].empty() && (win < 0 || best[s] < best[win])) win = s;
  }
  if (win < 0) return finish(problem, {}, 0.0, total);
  return finish(problem, best_labels[win], best[win], total);
}

}  // namespace gclr::exact
