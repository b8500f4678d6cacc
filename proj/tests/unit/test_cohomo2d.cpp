#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "ergolab/cohomo2d.hpp"
#include "ergolab/random.hpp"
#include "oracles.hpp"

using namespace ergolab;

namespace {

BitVector from_mask(std::uint32_t mask, std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, mask >> i & 1u);
  return v;
}

std::uint32_t to_mask(const BitVector& v) {
  std::uint32_t m = 0;
  for (auto i : v.indices()) m |= 1u << i;
  return m;
}

BitVector random_bits(std::size_t n, Rng& rng) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng.below(2) == 1);
  return v;
}

std::size_t cell(std::size_t x, std::size_t y, std::size_t cols) { return x * cols + y; }

}  // namespace

TEST(D0, ZeroAndConstantsAreClosed) {
  auto a = Action2D::torus_grid(3, 4);
  EXPECT_TRUE(d0(a, {BitVector(12)}).p.none());
  BitVector ones(12);
  for (std::size_t i = 0; i < 12; ++i) ones.set(i);
  auto pq = d0(a, {ones});
  EXPECT_TRUE(pq.p.none());
  EXPECT_TRUE(pq.q.none());
}

TEST(D0, SingleCellOnTwoByTwo) {
  auto a = Action2D::torus_grid(2, 2);
  auto pq = d0(a, {BitVector::from_indices(4, std::vector<std::size_t>{cell(0, 0, 2)})});
  EXPECT_EQ(pq.p.indices(), (std::vector<std::size_t>{cell(0, 0, 2), cell(1, 0, 2)}));
  EXPECT_EQ(pq.q.indices(), (std::vector<std::size_t>{cell(0, 0, 2), cell(0, 1, 2)}));
}

TEST(D1, SingleEdgeOnTwoByTwo) {
  auto a = Action2D::torus_grid(2, 2);
  auto f = d1(a, {BitVector::from_indices(4, std::vector<std::size_t>{cell(0, 0, 2)}), BitVector(4)});
  EXPECT_EQ(f.f.indices(), (std::vector<std::size_t>{cell(0, 0, 2), cell(0, 1, 2)}));
  EXPECT_TRUE(d1(a, {BitVector(4), BitVector(4)}).f.none());
}

TEST(D1, MatchesIndependentFormula) {
  Rng rng(1);
  for (auto [r, c] : {std::pair{2, 2}, {2, 3}, {3, 3}, {4, 5}}) {
    auto a = Action2D::torus_grid(r, c);
    oracle::Grid g{static_cast<std::size_t>(r), static_cast<std::size_t>(c)};
    for (int trial = 0; trial < 50; ++trial) {
      auto p = random_bits(g.size(), rng), q = random_bits(g.size(), rng);
      EXPECT_EQ(to_mask(d1(a, {p, q}).f), oracle::curl_mask(g, to_mask(p), to_mask(q)));
    }
  }
}

TEST(D1, CurlOfGradientVanishes) {
  Rng rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t r = 1 + rng.below(64), c = 1 + rng.below(64);
    auto a = Action2D::torus_grid(r, c);
    ASSERT_TRUE(d1(a, d0(a, {random_bits(r * c, rng)})).f.none());
  }
}

TEST(Matrices, AgreeWithOperators) {
  Rng rng(3);
  auto a = Action2D::torus_grid(3, 5);
  auto m0 = d0_matrix(a), m1 = d1_matrix(a);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = random_bits(15, rng);
    auto pq = d0(a, {c});
    auto flat = m0.multiply(c);
    for (std::size_t i = 0; i < 15; ++i) {
      EXPECT_EQ(flat[i], pq.p[i]);
      EXPECT_EQ(flat[15 + i], pq.q[i]);
    }
    BitVector both(30);
    auto p = random_bits(15, rng), q = random_bits(15, rng);
    for (std::size_t i = 0; i < 15; ++i) {
      both.set(i, p[i]);
      both.set(15 + i, q[i]);
    }
    EXPECT_EQ(m1.multiply(both), d1(a, {p, q}).f);
  }
}

TEST(SolveCurl, ZeroIsSolvedByZero) {
  auto a = Action2D::torus_grid(3, 3);
  auto s = solve_curl(a, {BitVector(9)});
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(s->p.none());
  EXPECT_TRUE(s->q.none());
}

TEST(SolveCurl, OnePlaquetteIsObstructed) {
  auto a = Action2D::torus_grid(2, 2);
  EXPECT_FALSE(solve_curl(a, {BitVector::from_indices(4, std::vector<std::size_t>{0})}).has_value());
}

TEST(SolveCurl, TwoPlaquettesAreSolvable) {
  for (std::size_t n : {2u, 3u}) {
    auto a = Action2D::torus_grid(n, n);
    Cochain2 f{BitVector::from_indices(n * n, std::vector<std::size_t>{0, n * n - 1})};
    auto s = solve_curl(a, f);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(d1(a, *s), f);
  }
}

TEST(SolveCurl, ExhaustiveParityAndLexLeast) {
  for (auto [r, c] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    oracle::Grid g{static_cast<std::size_t>(r), static_cast<std::size_t>(c)};
    const std::size_t n = g.size();
    auto a = Action2D::torus_grid(g.rows, g.cols);
    // Lexicographically least preimage of every F: enumerate (P, Q) with P[0]
    // as the most significant coordinate and keep the first hit.
    std::vector<std::int64_t> least(std::size_t{1} << n, -1);
    for (std::uint32_t k = 0; k < (1u << (2 * n)); ++k) {
      std::uint32_t v = 0;
      for (std::size_t i = 0; i < 2 * n; ++i)
        if (k >> (2 * n - 1 - i) & 1u) v |= 1u << i;
      auto f = oracle::curl_mask(g, v & ((1u << n) - 1), v >> n);
      if (least[f] < 0) least[f] = v;
    }
    for (std::uint32_t f = 0; f < (1u << n); ++f) {
      auto s = solve_curl(a, {from_mask(f, n)});
      const bool even = __builtin_popcount(f) % 2 == 0;
      ASSERT_EQ(s.has_value(), even) << r << "x" << c << " F=" << f;
      ASSERT_EQ(s.has_value(), least[f] >= 0);
      if (s) {
        EXPECT_EQ(to_mask(d1(a, *s).f), f);
        EXPECT_EQ(to_mask(s->p) | (to_mask(s->q) << n), static_cast<std::uint32_t>(least[f]));
      }
    }
  }
}

TEST(SolveCurl, AnswersConfirmedByBruteForceImage) {
  Rng rng(4);
  for (auto [r, c] : {std::pair{3, 4}, {2, 5}}) {
    oracle::Grid g{static_cast<std::size_t>(r), static_cast<std::size_t>(c)};
    const std::size_t n = g.size();
    const std::uint64_t low = (std::uint64_t{1} << n) - 1;
    std::vector<bool> image(std::size_t{1} << n, false);
    for (std::uint64_t pq = 0; pq < (std::uint64_t{1} << (2 * n)); ++pq)
      image[oracle::curl_mask(g, static_cast<std::uint32_t>(pq & low), static_cast<std::uint32_t>(pq >> n))] = true;
    auto a = Action2D::torus_grid(g.rows, g.cols);
    for (int trial = 0; trial < 200; ++trial) {
      const auto f = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n));
      EXPECT_EQ(solve_curl(a, {from_mask(f, n)}).has_value(), static_cast<bool>(image[f]));
    }
  }
}

TEST(Dims, TorusGridsMatchBruteForce) {
  for (auto [r, c] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    oracle::Grid g{static_cast<std::size_t>(r), static_cast<std::size_t>(c)};
    auto dims = cohomology_dims(Action2D::torus_grid(g.rows, g.cols));
    const auto brute = oracle::brute_dims(g);
    EXPECT_EQ(dims, (CohomologyDims{brute[0], brute[1], brute[2]}));
    EXPECT_EQ(dims, (CohomologyDims{1, 2, 1}));
  }
}

TEST(Dims, LargerTorusGrids) {
  for (auto [r, c] : {std::pair{2, 7}, {5, 5}, {8, 3}, {16, 16}, {32, 31}})
    EXPECT_EQ(cohomology_dims(Action2D::torus_grid(r, c)), (CohomologyDims{1, 2, 1})) << r << "x" << c;
}

TEST(Dims, TrivialAction) {
  auto id = FinitePermutation::identity(6);
  EXPECT_EQ(cohomology_dims(Action2D(id, id)), (CohomologyDims{6, 12, 6}));
}

TEST(Dims, EulerCharacteristicVanishes) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = FinitePermutation::random(1 + rng.below(20), rng);
    // Powers of one permutation always commute.
    std::vector<std::size_t> t(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) t[x] = s(s(x));
    auto d = cohomology_dims(Action2D(s, FinitePermutation(t)));
    EXPECT_EQ(static_cast<long>(d.h0) - static_cast<long>(d.h1) + static_cast<long>(d.h2), 0);
  }
}

TEST(Action2D, RejectsNonCommutingPairs) {
  EXPECT_THROW(Action2D(FinitePermutation({1, 0, 2}), FinitePermutation({0, 2, 1})), std::invalid_argument);
  EXPECT_THROW(Action2D(FinitePermutation::cycle(3), FinitePermutation::cycle(4)), std::invalid_argument);
}
