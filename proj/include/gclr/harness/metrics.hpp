#pragma once

#include <vector>

namespace gclr::harness {

// (sse1 - sse2) / sse2; positive when the second algorithm is better.
double relative_improvement(double sse1, double sse2);

// (sse_algo - sse_cg) / sse_cg against the exact optimum.
double opt_gap(double sse_algo, double sse_cg);

// (sse_algo - best) / best with best the minimum over all algorithms.
double gap_from_best(double sse_algo, const std::vector<double>& sse_all);

}  // namespace gclr::harness
