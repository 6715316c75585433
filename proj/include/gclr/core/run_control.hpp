#pragma once

#include <chrono>
#include <functional>
#include <limits>
#include <optional>

namespace gclr::core {

using Clock = std::chrono::steady_clock;

// Cooperative time limit plus an anytime trace hook. Algorithms poll
// expired() between iterations and report each new incumbent through
// improved(); the callback gets the elapsed time since start and the SSE.
class RunControl {
 public:
  using TraceFn = std::function<void(double elapsed_ms, double sse)>;

  RunControl() : start_(Clock::now()) {}

  static RunControl with_limit(double seconds) {
    RunControl rc;
    rc.set_limit(seconds);
    return rc;
  }

  void set_limit(double seconds) {
    deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(seconds));
  }
  void set_trace(TraceFn fn) { trace_ = std::move(fn); }

  bool expired() const { return deadline_ && Clock::now() >= *deadline_; }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

  // Forwards strictly improving values only, so traces are monotone.
  void improved(double sse) {
    if (sse < best_) {
      best_ = sse;
      if (trace_) trace_(elapsed_ms(), sse);
    }
  }

 private:
  Clock::time_point start_;
  std::optional<Clock::time_point> deadline_;
  TraceFn trace_;
  double best_ = std::numeric_limits<double>::infinity();
};

}  // namespace gclr::core
