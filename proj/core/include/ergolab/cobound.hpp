#pragma once

// Coboundaries dB = T(B) + B over Z2: exact solving for permutations, and the
// skew-product (Stepin) ergodicity test as statistical evidence elsewhere.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ergolab/dynsys.hpp"
#include "ergolab/gf2.hpp"
#include "ergolab/msets.hpp"

namespace ergolab {

struct CoboundaryCertificate {
  bool solvable = false;
  // Normalized so the least element of every cycle is outside B.
  std::optional<FiniteSet> witness;
  // Indices into perm.cycles() of cycles meeting A an odd number of times.
  std::vector<std::size_t> obstruction;
};

struct CohomologyRank {
  std::size_t k = 0;               // number of cycles (ergodic components)
  std::size_t coboundary_dim = 0;  // GF(2) rank of d
};

// Point of X x Z2.
struct SkewState {
  Point base;
  bool parity = false;
};

enum class ErgodicityVerdict { kErgodicConsistent, kNonErgodic, kInconclusive };
enum class CoboundaryVerdict { kCoboundaryConsistent, kNonCoboundaryConsistent, kInconclusive };

std::string_view to_string(ErgodicityVerdict v) noexcept;
std::string_view to_string(CoboundaryVerdict v) noexcept;

struct StepinParams {
  std::uint64_t orbit_length = 1'000'000;
  std::size_t cells = 64;
  std::uint64_t seed = 1;
};

// Chi-square decision rule shared by the skew-product and induced-map tests.
struct VerdictRule {
  double tail = 0.005;          // quantile level of the acceptance threshold
  double reject_factor = 10.0;  // statistic above reject_factor * threshold => non-ergodic
  double heavy_mirror = 5.0;    // empty bin whose mirror exceeds heavy_mirror * expected
};

struct ErgodicityReport {
  ErgodicityVerdict verdict = ErgodicityVerdict::kInconclusive;
  double statistic = 0;
  double threshold = 0;
  std::size_t dof = 0;
  std::size_t cells = 0;
  std::uint64_t orbit_length = 0;
  std::uint64_t seed = 0;
  std::size_t empty_bins = 0;
};

// Matrix of B -> T(B) + B in the standard basis.
Gf2Matrix coboundary_matrix(const FinitePermutation& perm);

Set coboundary_apply(const System& system, const Set& b);

CoboundaryCertificate solve_coboundary_finite(const FinitePermutation& perm, const FiniteSet& a);

CohomologyRank cohomology_rank_finite(const FinitePermutation& perm);

// (x, s) -> (T x, s + 1_A(x))
SkewState skew_step(const System& system, const Set& a, const SkewState& state);

// Decides a histogram of visits. Bins 2c and 2c+1 are mirrors when `paired`.
ErgodicityReport judge_histogram(std::span<const std::uint64_t> counts, bool paired, const VerdictRule& rule = {});

// Simulates the skew product from a seeded random base point with parity 0,
// bins visits into cells x {0,1} and tests against the uniform distribution.
// Requires orbit_length >= 20 * cells.
ErgodicityReport stepin_test(const System& system, const Set& a, const StepinParams& params,
                             const VerdictRule& rule = {});

struct CoboundaryClassification {
  CoboundaryVerdict verdict = CoboundaryVerdict::kInconclusive;
  ErgodicityReport evidence;
};

// Statistical evidence only: a reducible skew product reads as coboundary-consistent.
CoboundaryClassification classify_coboundary(const System& system, const Set& a, const StepinParams& params,
                                             const VerdictRule& rule = {});

CoboundaryVerdict coboundary_verdict_from(ErgodicityVerdict v) noexcept;

// One rung of the cat-map challenge: the set [0,a) x [0,b) at grid resolution N.
struct CycleCheck {
  std::size_t length = 0;
  bool odd = false;
  ErgodicityVerdict verdict = ErgodicityVerdict::kInconclusive;
  double statistic = 0;
};

struct CatMapRung {
  std::size_t resolution = 0;
  std::size_t cells_in_set = 0;
  double measure = 0;
  std::size_t cycle_count = 0;
  std::size_t odd_cycles = 0;
  double odd_cycle_mass = 0;          // fraction of grid cells lying on odd cycles
  bool finite_coboundary = false;     // A is dB for the grid permutation
  bool finite_model_consistent = false;
  std::vector<CycleCheck> cycles;     // finite skew test restricted to each cycle
  ErgodicityReport continuous;        // skew test on the continuous cat map
  CoboundaryVerdict continuous_verdict = CoboundaryVerdict::kInconclusive;
};

// Exact status from cycle parities of the grid permutation, a skew test on every
// cycle (odd parity must read ergodic, even must read non-ergodic) and a skew
// test of the continuous map against the same cells.
CatMapRung catmap_challenge_rung(std::size_t resolution, double a, double b, const StepinParams& continuous);

}  // namespace ergolab
