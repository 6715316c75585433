#include "gclr/synth/patterns.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gclr/core/errors.hpp"

namespace gclr::synth {

double seasonal_pattern(int pattern_id, int t) {
  if (t < 1 || t > kWeeks) throw ContractError("seasonal_pattern: week " + std::to_string(t) + " out of range");
  constexpr double a = 0.8;
  const double x = static_cast<double>(t);
  switch (pattern_id) {
    case 1: return 0.0;
    case 2: return a * std::cos(2.0 * std::numbers::pi * (x - 1.0) / 52.0);
    case 3: return a * std::sin(std::numbers::pi * (x - 1.0) / 51.0);
    case 4: return a * (x - 26.5) / 25.5;
    case 5: return -a * (x - 26.5) / 25.5;
    case 6: return a * std::exp(-std::pow((x - 45.0) / 4.0, 2));
    case 7: return a * std::exp(-std::pow((x - 8.0) / 4.0, 2));
    default:
      throw ContractError("seasonal_pattern: pattern id " + std::to_string(pattern_id) +
                          " out of range 1..7");
  }
}

}  // namespace gclr::synth
