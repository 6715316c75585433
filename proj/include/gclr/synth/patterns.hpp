#pragma once

namespace gclr::synth {

inline constexpr int kPatternCount = 7;
inline constexpr int kWeeks = 52;

// Seasonal multiplier f_S(t) of pattern 1..7 at week t in 1..52:
// flat, U-shape, inverted U, rising ramp, falling ramp, late-year spike,
// early-year spike; amplitude 0.8.
double seasonal_pattern(int pattern_id, int t);

}  // namespace gclr::synth
