#pragma once

#include <cstdint>
#include <random>

namespace mgear {

// Deterministic uniform stream. Every random decision in a simulation flows
// through a single instance, so a trajectory is a pure function of
// (config, seed). Doubles are derived from the raw engine output instead of
// std::uniform_real_distribution, whose result sequence is
// implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mgear
