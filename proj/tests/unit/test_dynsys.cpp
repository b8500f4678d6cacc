#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ergolab/dynsys.hpp"
#include "ergolab/random.hpp"
#include "ergolab/stats.hpp"

using namespace ergolab;

namespace {

double circle_gap(double a, double b) {
  const double d = std::fabs(a - b);
  return std::min(d, 1.0 - d);
}

}  // namespace

TEST(CatMap, OriginIsFixed) {
  auto y = std::get<TorusPoint>(ergolab::apply(CatMap{}, TorusPoint{0.0, 0.0}));
  EXPECT_EQ(y, (TorusPoint{0.0, 0.0}));
}

TEST(CatMap, HalfHalfMapsToHalfZero) {
  auto y = std::get<TorusPoint>(ergolab::apply(CatMap{}, TorusPoint{0.5, 0.5}));
  EXPECT_DOUBLE_EQ(y[0], 0.5);
  EXPECT_DOUBLE_EQ(y[1], 0.0);
}

TEST(FinitePermutation, CycleClosesAtEnd) {
  EXPECT_EQ(std::get<std::size_t>(ergolab::apply(FinitePermutation::cycle(4), std::size_t{3})), 0u);
}

TEST(FinitePermutation, RejectsNonBijections) {
  EXPECT_THROW(FinitePermutation({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(FinitePermutation({0, 3}), std::invalid_argument);
  EXPECT_THROW(FinitePermutation(std::vector<std::size_t>{}), std::invalid_argument);
}

TEST(FinitePermutation, ApplyRejectsOutOfRange) {
  EXPECT_THROW(ergolab::apply(FinitePermutation::cycle(4), std::size_t{4}), std::out_of_range);
  EXPECT_THROW(ergolab::apply(FinitePermutation::cycle(4), TorusPoint{0.1}), std::invalid_argument);
}

TEST(Iterate, RationalRotationHasPeriodFour) {
  TorusRotation quarter({0.25});
  auto y = std::get<TorusPoint>(iterate(quarter, TorusPoint{0.0}, 4));
  EXPECT_NEAR(circle_gap(y[0], 0.0), 0.0, 1e-15);
}

TEST(Iterate, NegativeStepUsesInverse) {
  EXPECT_EQ(std::get<std::size_t>(iterate(FinitePermutation::cycle(4), std::size_t{0}, -1)), 3u);
}

TEST(Iterate, ZeroStepsIsIdentity) {
  TorusPoint x{0.3141, 0.2718};
  EXPECT_EQ(std::get<TorusPoint>(iterate(CatMap{}, x, 0)), x);
}

TEST(Iterate, AdditiveInExponent) {
  Rng rng(3);
  auto perm = FinitePermutation::random(50, rng);
  for (int a = -7; a <= 7; a += 2)
    for (int b = -5; b <= 5; b += 3)
      EXPECT_EQ(iterate(perm, iterate(perm, std::size_t{17}, a), b), iterate(perm, std::size_t{17}, a + b));
}

TEST(Iterate, RotationRoundTripAfterMillionSteps) {
  Rng rng(4);
  auto rot = TorusRotation({kGoldenMean, 0.5 * kGoldenMean});
  auto x = std::get<TorusPoint>(random_point(rot, rng));
  auto back = std::get<TorusPoint>(iterate(rot, iterate(rot, x, 1'000'000), -1'000'000));
  for (std::size_t i = 0; i < 2; ++i) EXPECT_LT(circle_gap(back[i], x[i]), 1e-9);
}

TEST(Iterate, CatMapRoundTripOnLatticePoints) {
  // Dyadic rationals are closed under the map and exact in binary.
  TorusPoint x{0.375, 0.8125};
  EXPECT_EQ(std::get<TorusPoint>(iterate(CatMap{}, iterate(CatMap{}, x, 1'000'000), -1'000'000)), x);
}

TEST(Iterate, CatMapShortRoundTripOnRandomPoints) {
  // Rounding errors grow by ~2.618 per step in each direction.
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto x = std::get<TorusPoint>(random_point(CatMap{}, rng));
    auto back = std::get<TorusPoint>(iterate(CatMap{}, iterate(CatMap{}, x, 12), -12));
    for (std::size_t c = 0; c < 2; ++c) EXPECT_LT(circle_gap(back[c], x[c]), 1e-9);
  }
}

TEST(Cycles, IdentityIsAllFixedPoints) {
  auto cyc = FinitePermutation::identity(3).cycles();
  EXPECT_EQ(cyc, (std::vector<std::vector<std::size_t>>{{0}, {1}, {2}}));
}

TEST(Cycles, SingleFourCycle) {
  EXPECT_EQ(FinitePermutation::cycle(4).cycles(), (std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}}));
}

TEST(Cycles, TwoTranspositions) {
  EXPECT_EQ(FinitePermutation({1, 0, 3, 2}).cycles(), (std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}}));
}

TEST(Cycles, PartitionAndOrbitOrder) {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    auto perm = FinitePermutation::random(1 + rng.below(200), rng);
    std::vector<int> hits(perm.size(), 0);
    std::size_t prev_min = 0;
    bool first = true;
    for (const auto& c : perm.cycles()) {
      EXPECT_EQ(c.front(), *std::min_element(c.begin(), c.end()));
      if (!first) EXPECT_GT(c.front(), prev_min);
      prev_min = c.front();
      first = false;
      for (std::size_t i = 0; i < c.size(); ++i) {
        ++hits[c[i]];
        EXPECT_EQ(perm(c[i]), c[(i + 1) % c.size()]);
      }
    }
    for (int h : hits) EXPECT_EQ(h, 1);
  }
}

TEST(Torus, CoordinatesStayInUnitInterval) {
  EXPECT_EQ(wrap_unit(-1e-20), 0.0);
  EXPECT_EQ(wrap_unit(1.0), 0.0);
  EXPECT_DOUBLE_EQ(wrap_unit(-0.25), 0.75);
  Rng rng(7);
  TorusPoint x{0.999999999999, 0.0};
  for (int i = 0; i < 10000; ++i) {
    x = std::get<TorusPoint>(ergolab::apply(CatMap{}, x));
    for (double c : x.coords()) ASSERT_TRUE(c >= 0.0 && c < 1.0);
  }
}

TEST(CatMap, PushforwardOfUniformSamplesFillsGridEvenly) {
  constexpr std::size_t kSamples = 1'000'000;
  constexpr std::size_t kGrid = 16;
  Rng rng(8);
  std::vector<double> counts(kGrid * kGrid, 0.0);
  for (std::size_t s = 0; s < kSamples; ++s) {
    auto y = std::get<TorusPoint>(ergolab::apply(CatMap{}, random_point(CatMap{}, rng)));
    counts[static_cast<std::size_t>(y[0] * kGrid) * kGrid + static_cast<std::size_t>(y[1] * kGrid)] += 1;
  }
  const double p = 1.0 / (kGrid * kGrid);
  const double expected = kSamples * p;
  const double se = std::sqrt(kSamples * p * (1 - p));
  double chi2 = 0;
  int outside = 0;
  for (double c : counts) {
    chi2 += (c - expected) * (c - expected) / expected;
    if (std::fabs(c - expected) >= 3 * se) ++outside;
  }
  EXPECT_LT(chi2, chi_square_upper_quantile(kGrid * kGrid - 1, 0.005));
  // About 0.7 of 256 cells leave the 3-sigma band by chance; P(more than 4) < 0.01.
  EXPECT_LE(outside, 4);
}

TEST(CatMap, CellPermutationMatchesIntegerMatrix) {
  for (std::size_t n : {1u, 2u, 5u, 8u, 13u}) {
    auto perm = CatMap::cell_permutation(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_EQ(perm(i * n + j), ((2 * i + j) % n) * n + (i + j) % n);
  }
}

TEST(FinitePermutation, SignIsParityOfTranspositions) {
  EXPECT_EQ(FinitePermutation::cycle(4).sign(), -1);
  EXPECT_EQ(FinitePermutation::cycle(5).sign(), 1);
  EXPECT_EQ(FinitePermutation({1, 0, 3, 2}).sign(), 1);
}
