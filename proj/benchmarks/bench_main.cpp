#include <benchmark/benchmark.h>

#include "ergolab/cobound.hpp"
#include "ergolab/cohomo2d.hpp"
#include "ergolab/gf2.hpp"
#include "ergolab/induced.hpp"
#include "ergolab/random.hpp"
#include "ergolab/spectral.hpp"

using namespace ergolab;

namespace {

Gf2Matrix dense_random(std::size_t n, Rng& rng) {
  Gf2Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rng.below(2)) m.set(r, c);
  return m;
}

void BM_Gf2RankDense(benchmark::State& state) {
  Rng rng(1);
  const auto m = dense_random(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Gf2RankDense)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_CohomologyRankFinite(benchmark::State& state) {
  Rng rng(2);
  const auto perm = FinitePermutation::random(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_rank_finite(perm));
}
BENCHMARK(BM_CohomologyRankFinite)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMicrosecond);

void BM_SolveCoboundaryFinite(benchmark::State& state) {
  Rng rng(3);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto perm = FinitePermutation::random(n, rng);
  BitVector bits(n);
  for (std::size_t i = 0; i < n; ++i) bits.set(i, rng.below(2) == 1);
  const FiniteSet a(bits);
  for (auto _ : state) benchmark::DoNotOptimize(solve_coboundary_finite(perm, a));
}
BENCHMARK(BM_SolveCoboundaryFinite)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMicrosecond);

void BM_StepinGoldenRotation(benchmark::State& state) {
  const System rot = TorusRotation::golden();
  const Set a = IntervalUnion({{0, 0.5}});
  StepinParams p;
  p.orbit_length = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stepin_test(rot, a, p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StepinGoldenRotation)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_StepinCatMap(benchmark::State& state) {
  const System cat = CatMap{};
  const Set a = GridSet::rectangle(32, 0.5, 0.5);
  StepinParams p;
  p.orbit_length = 1'000'000;
  p.cells = 1024;
  for (auto _ : state) benchmark::DoNotOptimize(stepin_test(cat, a, p));
  state.SetItemsProcessed(state.iterations() * 1'000'000);
}
BENCHMARK(BM_StepinCatMap)->Unit(benchmark::kMillisecond);

void BM_Autocorrelation(benchmark::State& state) {
  const System cat = CatMap{};
  const auto f = Observable::torus_character({1, 0});
  const auto lags = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(autocorrelation(cat, f, 1'000'000, lags, 1));
}
BENCHMARK(BM_Autocorrelation)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_ReturnTimeStats(benchmark::State& state) {
  const System rot = TorusRotation::golden();
  const Set a = IntervalUnion({{0, 1.0 / static_cast<double>(state.range(0))}});
  for (auto _ : state) benchmark::DoNotOptimize(return_time_stats(rot, a, 100'000, 0, 1));
}
BENCHMARK(BM_ReturnTimeStats)->Arg(2)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SolveCurl(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto action = Action2D::torus_grid(n, n);
  Rng rng(4);
  BitVector f(n * n);
  for (std::size_t i = 0; i < n * n; ++i) f.set(i, rng.below(2) == 1);
  if (f.count() % 2) f.flip(0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_curl(action, {f}));
}
BENCHMARK(BM_SolveCurl)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
