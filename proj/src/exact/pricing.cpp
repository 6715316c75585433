#include "gclr/exact/pricing.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "gclr/core/errors.hpp"

namespace gclr::exact {

namespace {

struct Incumbent {
  EntitySet set;
  double value = std::numeric_limits<double>::infinity();
  double sse = 0.0;

  bool offer(const EntitySet& s, double v, double c) {
    if (set.universe() == 0 || v < value || (v == value && lex_less(s, set))) {
      set = s;
      value = v;
      sse = c;
      return true;
    }
    return false;
  }
};

double pi_sum(const EntitySet& s, const Eigen::VectorXd& pi) {
  double t = 0.0;
  s.for_each([&](std::size_t i) { t += pi[static_cast<Eigen::Index>(i)]; });
  return t;
}

PricingResult finish(const UnitProblem& problem, const Incumbent& inc, double upsilon,
                     std::size_t nodes, bool proven) {
  PricingResult r;
  r.members = inc.set;
  r.sse = inc.sse;
  r.reduced_cost = inc.value - upsilon;
  r.beta = problem.costs().fit(problem.expand(inc.set)).beta;
  r.nodes_explored = nodes;
  r.proven = proven;
  return r;
}

void check_inputs(const UnitProblem& problem, const Eigen::VectorXd& pi) {
  if (static_cast<std::size_t>(pi.size()) != problem.size())
    throw ContractError("pricing: dual vector length " + std::to_string(pi.size()) +
                              " does not match " + std::to_string(problem.size()) + " units");
  int total = 0;
  for (std::size_t r = 0; r < problem.size(); ++r) total += problem.weight(r);
  if (total < problem.n()) throw InfeasibleError("pricing: fewer than n entities in total");
}

struct Node {
  EntitySet in;
  std::size_t pos;
  int weight;
  double pi_in;
  double sse;      // exact when evaluated, else the parent's (a lower bound)
  bool evaluated;
  double bound;
};

}  // namespace

double pricing_tolerance(const UnitProblem& problem) {
  return 1e-12 * std::max(1.0, problem.costs().total_sum_squares());
}

// Node bound. With F the fixed-in units and U the undecided ones, any
// completion F + T (T in U) satisfies c(F + T) >= c(F) by monotonicity,
// which gives the basic bound c(F) - pi(F) - sum_U max(pi, 0). The Gram
// bound sharpens it: writing the SSE of F at beta as c(F) + Q_F(beta) with
// Q_F >= 0 and |T| <= |U| = u,
//   c(F + T) >= c(F) + sum_{t in T} min_beta [Q_F(beta)/u + e_t(beta)]
//            =  c(F) + sum_{t in T} h_t,
// where h_t = sse(G_F/u + G_t) - c(F)/u needs one small solve per unit.
PricingResult solve_pricing_bnb(const UnitProblem& problem, const Eigen::VectorXd& pi,
                                double upsilon, const PricingOptions& options) {
  check_inputs(problem, pi);
  const auto R = problem.size();
  const int n = problem.n();
  const double tol = pricing_tolerance(problem);

  std::vector<std::size_t> order(R);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pi[a] > pi[b]; });
  std::vector<double> suffix_pos(R + 1, 0.0);
  std::vector<int> suffix_w(R + 1, 0);
  for (std::size_t t = R; t-- > 0;) {
    suffix_pos[t] = suffix_pos[t + 1] + std::max(pi[order[t]], 0.0);
    suffix_w[t] = suffix_w[t + 1] + problem.weight(order[t]);
  }

  auto value_of = [&](const EntitySet& s) {
    const double c = problem.cost(s);
    return std::pair{c - pi_sum(s, pi), c};
  };

  Incumbent inc;
  {
    const EntitySet* best_warm = nullptr;
    double best_warm_value = std::numeric_limits<double>::infinity();
    for (const auto& s : options.warm_sets) {
      if (s.universe() != R || problem.weight(s) < n) continue;
      const auto [v, c] = value_of(s);
      inc.offer(s, v, c);
      if (v < best_warm_value) {
        best_warm_value = v;
        best_warm = &s;
      }
    }
    if (best_warm) {
      for (std::size_t t = 0; t < R; ++t) {
        if (best_warm->contains(t)) continue;
        auto s = *best_warm;
        s.insert(t);
        const auto [v, c] = value_of(s);
        inc.offer(s, v, c);
      }
    }
  }

  std::vector<Node> stack;
  stack.push_back({EntitySet(R), 0, 0, 0.0, 0.0, true, -suffix_pos[0]});
  std::size_t nodes = 0;
  bool proven = true;
  Eigen::MatrixXd scaled;

  while (!stack.empty()) {
    if (options.restart_interval && nodes && nodes % options.restart_interval == 0) {
      // Best-first restart: the most promising open node goes on top.
      std::stable_sort(stack.begin(), stack.end(),
                       [](const Node& a, const Node& b) { return a.bound > b.bound; });
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    ++nodes;
    if (options.control && nodes % 4096 == 0 && options.control->expired()) {
      proven = false;
      break;
    }

    if (node.weight + suffix_w[node.pos] < n) continue;
    if (node.bound > inc.value + tol) continue;

    if (!node.evaluated) {
      node.sse = problem.cost(node.in);
      node.evaluated = true;
      node.bound = node.sse - node.pi_in - suffix_pos[node.pos];
      if (node.bound > inc.value + tol) continue;
    }
    if (node.weight >= n) inc.offer(node.in, node.sse - node.pi_in, node.sse);

    if (node.pos == R) continue;
    if (node.weight >= n && pi[order[node.pos]] <= 0.0) continue;

    if (options.gram_bound && !node.in.empty() && R - node.pos >= options.gram_bound_min_undecided) {
      const auto u = static_cast<double>(R - node.pos);
      scaled = problem.costs().gram(problem.expand(node.in)) / u;
      double extra = 0.0;
      for (std::size_t t = node.pos; t < R; ++t) {
        const auto r = order[t];
        if (pi[r] <= 0.0) break;
        const double h = core::gram_sse(scaled + problem.unit_gram(r)) - node.sse / u;
        extra += std::min(0.0, std::max(h, 0.0) - pi[r]);
      }
      node.bound = node.sse - node.pi_in + extra;
      if (node.bound > inc.value + tol) continue;
    }

    const auto r = order[node.pos];
    // Exclude child first so the include child is explored first.
    stack.push_back({node.in, node.pos + 1, node.weight, node.pi_in, node.sse, true,
                     node.sse - node.pi_in - suffix_pos[node.pos + 1]});
    auto in = node.in;
    in.insert(r);
    stack.push_back({std::move(in), node.pos + 1, node.weight + problem.weight(r),
                     node.pi_in + pi[r], node.sse, false,
                     node.sse - node.pi_in - pi[r] - suffix_pos[node.pos + 1]});
  }
  return finish(problem, inc, upsilon, nodes, proven);
}

namespace {

EntitySet from_mask(std::size_t R, std::uint64_t mask) {
  EntitySet s(R);
  for (std::size_t r = 0; r < R; ++r)
    if (mask >> r & 1u) s.insert(r);
  return s;
}

void check_guard(const UnitProblem& problem, std::size_t max_units) {
  if (problem.size() > max_units || problem.size() > 62)
    throw RefusalError("pricing_enumerate: " + std::to_string(problem.size()) +
                             " units exceed the enumeration guard of " +
                             std::to_string(max_units));
}

}  // namespace

PricingResult pricing_enumerate(const UnitProblem& problem, const Eigen::VectorXd& pi,
                                double upsilon, std::size_t max_units) {
  check_inputs(problem, pi);
  check_guard(problem, max_units);
  const auto R = problem.size();
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << R);
  std::vector<Incumbent> best;
#pragma omp parallel
  {
#pragma omp single
    best.resize(static_cast<std::size_t>(omp_get_num_threads()));
    Incumbent local;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t mask = 1; mask < total; ++mask) {
      const auto s = from_mask(R, static_cast<std::uint64_t>(mask));
      if (problem.weight(s) < problem.n()) continue;
      const double c = problem.costs().sse_uncached(problem.expand(s));
      local.offer(s, c - pi_sum(s, pi), c);
    }
    best[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
  }
  Incumbent inc;
  for (const auto& b : best)
    if (b.set.universe()) inc.offer(b.set, b.value, b.sse);
  return finish(problem, inc, upsilon, static_cast<std::size_t>(total - 1), true);
}

PricingResult pricing_enumerate_serial(const UnitProblem& problem, const Eigen::VectorXd& pi,
                                       double upsilon, std::size_t max_units) {
  check_inputs(problem, pi);
  check_guard(problem, max_units);
  const auto R = problem.size();
  const auto total = std::uint64_t{1} << R;
  Incumbent inc;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    const auto s = from_mask(R, mask);
    if (problem.weight(s) < problem.n()) continue;
    const double c = problem.costs().sse_uncached(problem.expand(s));
    inc.offer(s, c - pi_sum(s, pi), c);
  }
  return finish(problem, inc, upsilon, static_cast<std::size_t>(total - 1), true);
}

}  // namespace gclr::exact
