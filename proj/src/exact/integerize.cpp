#include "gclr/exact/integerize.hpp"

#include <algorithm>
#include <limits>

#include "gclr/core/errors.hpp"

namespace gclr::exact {

namespace {

struct Search {
  const std::vector<Column>& pool;
  std::size_t rows;
  int K;
  std::size_t node_limit;
  std::vector<std::vector<std::size_t>> by_row;
  std::vector<double> share;
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best;
  double best_cost = std::numeric_limits<double>::infinity();
  std::size_t nodes = 0;

  void run(EntitySet& covered, double cost, double remaining_share) {
    if (++nodes > node_limit) return;
    std::size_t row = rows;
    for (std::size_t r = 0; r < rows; ++r)
      if (!covered.contains(r)) {
        row = r;
        break;
      }
    if (row == rows) {
      if (static_cast<int>(chosen.size()) == K && cost < best_cost) {
        best_cost = cost;
        best = chosen;
      }
      return;
    }
    if (static_cast<int>(chosen.size()) >= K) return;
    for (const auto s : by_row[row]) {
      const auto& col = pool[s];
      if (col.members.intersects(covered)) continue;
      double freed = 0.0;
      col.members.for_each([&](std::size_t r) { freed += share[r]; });
      const double next_share = remaining_share - freed;
      const double next_cost = cost + col.cost;
      if (next_cost + std::max(next_share, 0.0) * (1.0 - 1e-12) >= best_cost) continue;
      covered |= col.members;
      chosen.push_back(s);
      run(covered, next_cost, next_share);
      chosen.pop_back();
      covered -= col.members;
    }
  }
};

}  // namespace

std::vector<std::size_t> integerize(const std::vector<Column>& pool, std::size_t rows, int K,
                                    std::size_t node_limit) {
  Search search{pool, rows, K, node_limit, {}, {}, {}, {}};
  search.by_row.resize(rows);
  search.share.assign(rows, std::numeric_limits<double>::infinity());
  for (std::size_t s = 0; s < pool.size(); ++s) {
    const auto& col = pool[s];
    if (col.members.universe() != rows) throw ContractError("integerize: column universe mismatch");
    const double per = col.cost / static_cast<double>(std::max<std::size_t>(col.members.size(), 1));
    col.members.for_each([&](std::size_t r) {
      search.by_row[r].push_back(s);
      search.share[r] = std::min(search.share[r], per);
    });
  }
  for (std::size_t r = 0; r < rows; ++r)
    if (search.by_row[r].empty())
      throw InfeasibleError("integerize: no pool column covers row " + std::to_string(r));
  for (auto& list : search.by_row)
    std::stable_sort(list.begin(), list.end(),
                     [&](std::size_t a, std::size_t b) { return pool[a].cost < pool[b].cost; });

  double total_share = 0.0;
  for (double v : search.share) total_share += v;
  EntitySet covered(rows);
  search.run(covered, 0.0, total_share);
  if (search.best.empty())
    throw InfeasibleError(search.nodes > node_limit
                                    ? "integerize: node limit reached without an exact cover"
                                    : "integerize: pool admits no exact cover with K columns");
  return search.best;
}

}  // namespace gclr::exact
