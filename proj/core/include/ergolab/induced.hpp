#pragma once

// Kakutani induced transformations T_A (first return to A).

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ergolab/cobound.hpp"
#include "ergolab/dynsys.hpp"
#include "ergolab/msets.hpp"

namespace ergolab {

// No return to A within the cap.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(std::uint64_t cap)
      : std::runtime_error("no return to A within " + std::to_string(cap) + " steps"), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

// Rejection sampling could not find a point of A.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kRejectionLimit = 1'000'000;

struct ReturnRecord {
  Point point;
  std::uint64_t return_time = 0;
  Point next;
};

struct ReturnStats {
  std::uint64_t count = 0;  // samples that returned within the cap
  double mean = 0;          // over returned samples only
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t cap_hits = 0;
  std::uint64_t samples = 0;
  std::uint64_t cap = 0;
  std::uint64_t seed = 0;
};

// max(10^6, 100 / m(A))
std::uint64_t default_return_cap(double measure);

// Requires x in A and cap >= 1. Throws CapExceededError.
ReturnRecord induced_apply(const System& system, const Set& a, const Point& x, std::uint64_t cap);

// Return times of `samples` seeded uniform points of A; cap = 0 selects the default.
// For ergodic T the mean tends to 1 / m(A).
ReturnStats return_time_stats(const System& system, const Set& a, std::uint64_t samples, std::uint64_t cap,
                              std::uint64_t seed);

// x, T_A x, ..., T_A^{steps-1} x.
std::vector<Point> induced_orbit(const System& system, const Set& a, const Point& x, std::size_t steps,
                                 std::uint64_t cap);

// Equidistribution test of a T_A^2 orbit over cells of equal conditional measure
// in A. T_A^2 is ergodic exactly when A is not a coboundary.
ErgodicityReport ta2_ergodicity_experiment(const System& system, const Set& a, const StepinParams& params,
                                           std::uint64_t cap = 0, const VerdictRule& rule = {});

// Uniform random point of A by rejection; throws SamplingError after kRejectionLimit misses.
Point sample_in(const System& system, const Set& a, Rng& rng);

}  // namespace ergolab
