#pragma once

// Koopman-operator correlation analysis: c[n] = <U^n f, f>, the Wiener
// weak-mixing statistic and a Fejer-smoothed spectral density.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ergolab/dynsys.hpp"
#include "ergolab/msets.hpp"

namespace ergolab {

class Observable {
 public:
  enum class Kind { kTorusCharacter, kFiberSign, kGridFunction };

  // x -> exp(2 pi i k.x)
  static Observable torus_character(std::vector<int> k);
  // (x, s) -> (-1)^s on the skew product X x Z2
  static Observable fiber_sign();
  // Constant on the cells of the N^dim grid; dim = 0 means one value per finite state.
  static Observable grid_function(std::size_t n, std::size_t dim, std::vector<double> values);
  static Observable constant(double value);

  Kind kind() const noexcept { return kind_; }
  bool mean_removed() const noexcept { return mean_removed_; }
  Observable& set_mean_removed(bool v) noexcept {
    mean_removed_ = v;
    return *this;
  }

  std::complex<double> operator()(const Point& x, bool parity) const;
  std::complex<double> operator()(const TorusPoint& x, bool parity) const;
  std::complex<double> operator()(std::size_t x, bool parity) const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::kGridFunction;
  bool mean_removed_ = true;
  std::vector<int> k_;
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> values_;
};

enum class OrbitMode { kBase, kInduced, kSkew };
std::string_view to_string(OrbitMode m) noexcept;

// Which dynamics drives the orbit: T itself, the induced map T_A, or the skew product T x A.
struct OrbitSpec {
  OrbitMode mode = OrbitMode::kBase;
  std::optional<Set> set;
  std::uint64_t cap = 0;  // induced mode; 0 selects the default cap
};

struct CorrelationSequence {
  std::size_t lags = 0;                  // L; c holds lags 0..L
  std::vector<std::complex<double>> c;
  std::uint64_t orbit_length = 0;
  std::uint64_t seed = 0;
  bool mean_removed = true;
};

struct SpectralDensityEstimate {
  std::size_t bins = 0;
  std::vector<double> density;  // mass of [k/bins, (k+1)/bins), clipped at zero
  double total_mass = 0;
};

struct RootOfUnity {
  std::size_t numerator = 0;
  std::size_t order = 1;
  std::complex<double> value() const;
  bool is_one() const noexcept { return numerator == 0; }
};

enum class SpectrumVerdict { kPointSpectrumConsistent, kContinuousSpectrumConsistent, kInconclusive };
std::string_view to_string(SpectrumVerdict v) noexcept;

struct WeakMixingParams {
  std::uint64_t orbit_length = 1'000'000;
  std::size_t lags = 4096;
  std::uint64_t seed = 1;
  OrbitSpec orbit;
  double continuous_below = 0.05;
  double point_above = 0.5;
};

struct WeakMixingResult {
  std::string observable;
  double wm = 0;
  SpectrumVerdict verdict = SpectrumVerdict::kInconclusive;
  CorrelationSequence correlations;
};

// f along one orbit of `length` points, seeded start.
std::vector<std::complex<double>> sample_observable(const System& system, const Observable& f, std::size_t length,
                                                    std::uint64_t seed, const OrbitSpec& orbit = {});

// c[n] = (1/M) sum_{j<M} g[j+n] conj(g[j]) for n = 0..lags, with M = orbit_length
// and g the (optionally mean-removed) samples. Requires orbit_length >= 10 * lags.
CorrelationSequence autocorrelation(const System& system, const Observable& f, std::uint64_t orbit_length,
                                    std::size_t lags, std::uint64_t seed, const OrbitSpec& orbit = {});

// Same estimator applied to given samples (length >= orbit_length + lags).
CorrelationSequence correlate(std::vector<std::complex<double>> samples, std::uint64_t orbit_length,
                              std::size_t lags, bool remove_mean);

// (1/L) sum_{n=1}^{L} |c[n]|^2 / c[0]^2
double wiener_statistic(const CorrelationSequence& c);

// Bin-integrated Fejer sum  sum_{|n|<=L} (1 - |n|/(L+1)) c[n] e^{-2 pi i n theta}.
SpectralDensityEstimate spectral_density(const CorrelationSequence& c, std::size_t bins);

// Eigenvalues of the permutation's Koopman operator: all l-th roots of unity per l-cycle.
std::vector<RootOfUnity> koopman_spectrum_finite(const FinitePermutation& perm);

SpectrumVerdict classify_spectrum(double wm, const WeakMixingParams& params) noexcept;

std::vector<WeakMixingResult> weak_mixing_experiment(const System& system, const std::vector<Observable>& observables,
                                                     const WeakMixingParams& params);

}  // namespace ergolab
