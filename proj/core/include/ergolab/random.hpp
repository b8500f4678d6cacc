#pragma once

#include <cstdint>
#include <random>

namespace ergolab {

// Seeded generator used by every Monte-Carlo routine. Only the raw 64-bit
// engine output is consumed, so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);

  // Independent seed for sub-stream `stream` of `seed` (splitmix64 finalizer).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ergolab
