#pragma once

#include <cstdint>
#include <random>

namespace gclr::core {

using Rng = std::mt19937_64;

// Generator for one (seed, stream) pair. Streams of one seed are
// independent, so sub-tasks never share a sequence.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

}  // namespace gclr::core
