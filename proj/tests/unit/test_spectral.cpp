#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "ergolab/cobound.hpp"
#include "ergolab/random.hpp"
#include "ergolab/spectral.hpp"
#include "oracles.hpp"

#ifdef ERGOLAB_HAVE_EIGEN
#include <Eigen/Dense>
#endif

using namespace ergolab;
using cplx = std::complex<double>;

namespace {

cplx unit(double theta) { return std::polar(1.0, 2 * std::numbers::pi * theta); }

CorrelationSequence exact_rotation_correlations(double alpha, std::size_t lags) {
  CorrelationSequence c;
  c.lags = lags;
  for (std::size_t n = 0; n <= lags; ++n) c.c.push_back(unit(static_cast<double>(n) * alpha));
  return c;
}

CorrelationSequence white_correlations(std::size_t lags) {
  CorrelationSequence c;
  c.lags = lags;
  c.c.assign(lags + 1, 0.0);
  c.c[0] = 1.0;
  return c;
}

// Sorted by argument in [0, 2 pi) so that multisets can be compared elementwise.
std::vector<double> sorted_args(const std::vector<cplx>& z) {
  std::vector<double> out;
  for (auto v : z) {
    double a = std::arg(v);
    if (a < -1e-9) a += 2 * std::numbers::pi;
    out.push_back(std::max(a, 0.0));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<cplx> values(const std::vector<RootOfUnity>& roots) {
  std::vector<cplx> out;
  for (const auto& r : roots) out.push_back(r.value());
  return out;
}

}  // namespace

TEST(Autocorrelation, GoldenRotationCharacterIsExactPhase) {
  auto c = autocorrelation(TorusRotation::golden(), Observable::torus_character({1}), 1'000'000, 4096, 1);
  ASSERT_EQ(c.c.size(), 4097u);
  for (std::size_t n = 0; n <= 4096; ++n) EXPECT_LT(std::abs(c.c[n] - unit(n * kGoldenMean)), 1e-3) << n;
}

TEST(Autocorrelation, CatMapCharacterDecorrelates) {
  auto c = autocorrelation(CatMap{}, Observable::torus_character({1, 0}), 1'000'000, 4096, 1);
  EXPECT_NEAR(c.c[0].real(), 1.0, 1e-3);
  for (std::size_t n = 1; n <= 4096; ++n) EXPECT_LT(std::abs(c.c[n]), 5e-3) << n;
}

TEST(Autocorrelation, ConstantWithoutMeanRemoval) {
  auto f = Observable::constant(1.0);
  EXPECT_FALSE(f.mean_removed());
  auto c = autocorrelation(CatMap{}, f, 10'000, 100, 1);
  for (auto v : c.c) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-12);
}

TEST(Autocorrelation, MatchesDirectSum) {
  Rng rng(1);
  std::vector<cplx> g(1200);
  for (auto& v : g) v = {rng.uniform() - 0.5, rng.uniform() - 0.5};
  auto fast = correlate(g, 1000, 200, false);
  auto slow = oracle::direct_correlation(g, 1000, 200);
  for (std::size_t n = 0; n <= 200; ++n) EXPECT_LT(std::abs(fast.c[n] - slow[n]), 1e-12);

  auto samples = sample_observable(TorusRotation({0.1234, 0.3}), Observable::torus_character({2, -1}), 5100, 7);
  auto lib = autocorrelation(TorusRotation({0.1234, 0.3}), Observable::torus_character({2, -1}), 5000, 100, 7);
  cplx mean = 0;
  for (auto v : samples) mean += v;
  mean /= static_cast<double>(samples.size());
  for (auto& v : samples) v -= mean;
  auto ref = oracle::direct_correlation(samples, 5000, 100);
  for (std::size_t n = 0; n <= 100; ++n) EXPECT_LT(std::abs(lib.c[n] - ref[n]), 1e-10);
}

TEST(Autocorrelation, CauchySchwarz) {
  for (const System& sys : {System(TorusRotation::golden()), System(CatMap{})}) {
    auto c = autocorrelation(sys, Observable::torus_character(std::vector<int>(phase_dim(sys), 1)), 200'000, 1000, 2);
    EXPECT_GT(c.c[0].real(), 0.0);
    EXPECT_NEAR(c.c[0].imag(), 0.0, 1e-12);
    for (auto v : c.c) EXPECT_LE(std::abs(v), c.c[0].real() * (1 + 1e-6));
  }
}

TEST(Autocorrelation, MeanRemovalCentresTheSamples) {
  auto f = Observable::grid_function(8, 1, {1, 0, 0, 1, 1, 1, 0, 0});
  auto g = sample_observable(TorusRotation::golden(), f, 100'000, 3);
  cplx mean = 0;
  for (auto v : g) mean += v;
  mean /= static_cast<double>(g.size());
  auto c = autocorrelation(TorusRotation::golden(), f, 100'000, 100, 3);
  EXPECT_TRUE(c.mean_removed);
  EXPECT_NEAR(std::abs(mean), 0.5, 1e-2);
  // Lag zero of the centred samples is the variance of a balanced 0/1 function.
  EXPECT_NEAR(c.c[0].real(), 0.25, 1e-2);
}

TEST(Autocorrelation, RejectsShortOrbits) {
  EXPECT_THROW(autocorrelation(CatMap{}, Observable::torus_character({1, 0}), 999, 100, 1), std::invalid_argument);
}

TEST(Wiener, PurePhaseIsOne) {
  EXPECT_NEAR(wiener_statistic(exact_rotation_correlations(kGoldenMean, 4096)), 1.0, 1e-12);
}

TEST(Wiener, WhiteIsZero) { EXPECT_DOUBLE_EQ(wiener_statistic(white_correlations(64)), 0.0); }

TEST(Wiener, CatMapCharacterIsSmall) {
  auto c = autocorrelation(CatMap{}, Observable::torus_character({1, 0}), 1'000'000, 4096, 1);
  EXPECT_LT(wiener_statistic(c), 0.05);
}

TEST(Wiener, RotationCharacterIsOneForAnyLongOrbit) {
  for (std::uint64_t m : {100'000u, 300'000u, 1'000'000u}) {
    auto c = autocorrelation(TorusRotation::golden(), Observable::torus_character({1}), m, 4096, 5);
    EXPECT_NEAR(wiener_statistic(c), 1.0, 1e-3) << m;
  }
}

TEST(Wiener, DegenerateInputs) {
  auto c = white_correlations(8);
  c.c[0] = 0.0;
  EXPECT_THROW(wiener_statistic(c), std::invalid_argument);
  auto d = white_correlations(8);
  d.mean_removed = false;
  EXPECT_THROW(wiener_statistic(d), std::invalid_argument);
}

TEST(Density, PointMassPeaksAtNearestBin) {
  auto d = spectral_density(exact_rotation_correlations(kGoldenMean, 4096), 256);
  auto peak = std::max_element(d.density.begin(), d.density.end()) - d.density.begin();
  EXPECT_EQ(peak, static_cast<long>(std::floor(kGoldenMean * 256)));
  EXPECT_GT(d.density[peak], 0.5 * d.total_mass);
}

TEST(Density, WhiteIsFlat) {
  auto d = spectral_density(white_correlations(64), 32);
  for (double v : d.density) EXPECT_NEAR(v, 1.0 / 32, 1e-12);
  EXPECT_NEAR(d.total_mass, 1.0, 1e-12);
}

TEST(Density, FiberSignOnSkewProductSpreadsMass) {
  OrbitSpec orbit{OrbitMode::kSkew, Set(IntervalUnion({{0, 0.5}})), 0};
  auto c = autocorrelation(TorusRotation::golden(), Observable::fiber_sign(), 1'000'000, 4096, 1, orbit);
  auto d = spectral_density(c, 256);
  EXPECT_NEAR(d.total_mass, c.c[0].real(), 0.01 * c.c[0].real());
  for (double v : d.density) {
    EXPECT_GE(v, 0.0);
    EXPECT_LT(v, 0.2 * d.total_mass);
  }
}

TEST(Density, TotalMassMatchesLagZero) {
  auto c = autocorrelation(CatMap{}, Observable::torus_character({1, 1}), 200'000, 1000, 4);
  auto d = spectral_density(c, 100);
  EXPECT_NEAR(d.total_mass, c.c[0].real(), 0.01 * c.c[0].real());
  EXPECT_THROW(spectral_density(c, 1001), std::invalid_argument);
}

TEST(KoopmanFinite, FourCycle) {
  auto args = sorted_args(values(koopman_spectrum_finite(FinitePermutation::cycle(4))));
  ASSERT_EQ(args.size(), 4u);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(args[k], k * std::numbers::pi / 2, 1e-12);
}

TEST(KoopmanFinite, IdentityIsAllOnes) {
  for (const auto& r : koopman_spectrum_finite(FinitePermutation::identity(3))) EXPECT_TRUE(r.is_one());
}

TEST(KoopmanFinite, TwoTranspositions) {
  auto roots = koopman_spectrum_finite(FinitePermutation({1, 0, 3, 2}));
  ASSERT_EQ(roots.size(), 4u);
  EXPECT_EQ(std::count_if(roots.begin(), roots.end(), [](const RootOfUnity& r) { return r.is_one(); }), 2);
  for (const auto& r : roots) EXPECT_LT(std::abs(r.value() * r.value() - 1.0), 1e-12);
}

TEST(KoopmanFinite, ProductIsSignAndUnitMultiplicityIsCycleCount) {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    auto perm = FinitePermutation::random(1 + rng.below(60), rng);
    auto roots = koopman_spectrum_finite(perm);
    ASSERT_EQ(roots.size(), perm.size());
    cplx prod = 1;
    for (const auto& r : roots) prod *= r.value();
    EXPECT_LT(std::abs(prod - static_cast<double>(perm.sign())), 1e-9);
    auto ones = static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(), [](auto& r) { return r.is_one(); }));
    EXPECT_EQ(ones, cohomology_rank_finite(perm).k);
  }
}

#ifdef ERGOLAB_HAVE_EIGEN
TEST(KoopmanFinite, AgreesWithDenseEigensolver) {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto perm = FinitePermutation::random(1 + rng.below(24), rng);
    const auto n = static_cast<Eigen::Index>(perm.size());
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index x = 0; x < n; ++x) u(x, static_cast<Eigen::Index>(perm(x))) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(u, false);
    std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
    auto want = sorted_args(ev);
    auto got = sorted_args(values(koopman_spectrum_finite(perm)));
    ASSERT_EQ(want.size(), got.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-6);
  }
}
#endif

TEST(WeakMixing, GoldenRotationHasPointSpectrum) {
  WeakMixingParams p;
  auto res = weak_mixing_experiment(TorusRotation::golden(), {Observable::torus_character({1})}, p);
  ASSERT_EQ(res.size(), 1u);
  EXPECT_EQ(res[0].verdict, SpectrumVerdict::kPointSpectrumConsistent);
  EXPECT_NEAR(res[0].wm, 1.0, 1e-3);
  EXPECT_EQ(res[0].observable, "char:1");
}

TEST(WeakMixing, CatMapHasContinuousSpectrum) {
  WeakMixingParams p;
  auto res = weak_mixing_experiment(CatMap{}, {Observable::torus_character({1, 0})}, p);
  EXPECT_EQ(res[0].verdict, SpectrumVerdict::kContinuousSpectrumConsistent);
}

TEST(WeakMixing, InducedRotationOnRandomGridSetIsReported) {
  Rng rng(8);
  WeakMixingParams p;
  p.orbit_length = 200'000;
  p.lags = 1024;
  p.orbit = OrbitSpec{OrbitMode::kInduced, Set(GridSet::random(64, 1, 0.5, rng)), 0};
  auto res = weak_mixing_experiment(TorusRotation::golden(), {Observable::torus_character({1})}, p);
  ASSERT_EQ(res.size(), 1u);
  EXPECT_GE(res[0].wm, 0.0);
  EXPECT_EQ(res[0].verdict, classify_spectrum(res[0].wm, p));
  RecordProperty("wm", std::to_string(res[0].wm));
}

TEST(WeakMixing, ThresholdBands) {
  WeakMixingParams p;
  EXPECT_EQ(classify_spectrum(0.01, p), SpectrumVerdict::kContinuousSpectrumConsistent);
  EXPECT_EQ(classify_spectrum(0.3, p), SpectrumVerdict::kInconclusive);
  EXPECT_EQ(classify_spectrum(0.9, p), SpectrumVerdict::kPointSpectrumConsistent);
}

TEST(Observable, Values) {
  auto f = Observable::torus_character({1, 2});
  EXPECT_LT(std::abs(f(TorusPoint{0.25, 0.25}, false) - unit(0.75)), 1e-12);
  auto s = Observable::fiber_sign();
  EXPECT_EQ(s(TorusPoint{0.3}, true), -1.0);
  EXPECT_EQ(s(TorusPoint{0.3}, false), 1.0);
  auto g = Observable::grid_function(2, 2, {1, 2, 3, 4});
  EXPECT_EQ(g(TorusPoint{0.7, 0.2}, false), 3.0);
  auto h = Observable::grid_function(3, 0, {5, 6, 7});
  EXPECT_EQ(h(std::size_t{2}, false), 7.0);
  EXPECT_THROW(Observable::grid_function(2, 2, {1, 2, 3}), std::invalid_argument);
}
