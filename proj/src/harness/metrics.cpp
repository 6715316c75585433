#include "gclr/harness/metrics.hpp"

#include <algorithm>
#include <string>

#include "gclr/core/errors.hpp"

namespace gclr::harness {

double relative_improvement(double sse1, double sse2) {
  if (!(sse2 > 0.0)) throw ContractError("relative_improvement: sse2 must be positive");
  return (sse1 - sse2) / sse2;
}

double opt_gap(double sse_algo, double sse_cg) {
  if (!(sse_cg > 0.0)) throw ContractError("opt_gap: optimal SSE must be positive");
  return (sse_algo - sse_cg) / sse_cg;
}

double gap_from_best(double sse_algo, const std::vector<double>& sse_all) {
  if (sse_all.empty()) throw ContractError("gap_from_best: no reference values");
  const double best = *std::min_element(sse_all.begin(), sse_all.end());
  if (!(best > 0.0)) throw ContractError("gap_from_best: best SSE must be positive");
  return (sse_algo - best) / best;
}

}  // namespace gclr::harness
