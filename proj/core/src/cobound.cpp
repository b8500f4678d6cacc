#include "ergolab/cobound.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "detail/dynamics.hpp"
#include "ergolab/random.hpp"
#include "ergolab/stats.hpp"

namespace ergolab {

std::string_view to_string(ErgodicityVerdict v) noexcept {
  switch (v) {
    case ErgodicityVerdict::kErgodicConsistent:
      return "ergodic-consistent";
    case ErgodicityVerdict::kNonErgodic:
      return "non-ergodic";
    case ErgodicityVerdict::kInconclusive:
      break;
  }
  return "inconclusive";
}

std::string_view to_string(CoboundaryVerdict v) noexcept {
  switch (v) {
    case CoboundaryVerdict::kCoboundaryConsistent:
      return "coboundary-consistent";
    case CoboundaryVerdict::kNonCoboundaryConsistent:
      return "non-coboundary-consistent";
    case CoboundaryVerdict::kInconclusive:
      break;
  }
  return "inconclusive";
}

Gf2Matrix coboundary_matrix(const FinitePermutation& perm) {
  const std::size_t n = perm.size();
  Gf2Matrix m(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    // Column x is 1_{x} + 1_{T x}; a fixed point contributes nothing.
    m.flip(x, x);
    m.flip(perm(x), x);
  }
  return m;
}

Set coboundary_apply(const System& system, const Set& b) { return symdiff(pushforward(system, b), b); }

CoboundaryCertificate solve_coboundary_finite(const FinitePermutation& perm, const FiniteSet& a) {
  if (a.universe() != perm.size()) throw std::invalid_argument("finite set universe does not match permutation");
  CoboundaryCertificate cert;
  const auto cycles = perm.cycles();
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    bool parity = false;
    for (std::size_t x : cycles[c]) parity ^= a.bits()[x];
    if (parity) cert.obstruction.push_back(c);
  }
  cert.solvable = cert.obstruction.empty();
  if (!cert.solvable) return cert;

  // T(B) + B = A reads B(Tx) = B(x) + A(Tx) along each cycle, starting from B(min) = 0.
  BitVector b(perm.size());
  for (const auto& cycle : cycles) {
    bool value = false;
    for (std::size_t k = 1; k < cycle.size(); ++k) {
      value ^= a.bits()[cycle[k]];
      if (value) b.set(cycle[k]);
    }
  }
  cert.witness = FiniteSet(std::move(b));
  return cert;
}

CohomologyRank cohomology_rank_finite(const FinitePermutation& perm) {
  return CohomologyRank{perm.cycle_count(), rank(coboundary_matrix(perm))};
}

SkewState skew_step(const System& system, const Set& a, const SkewState& state) {
  return SkewState{ergolab::apply(system, state.base), state.parity != contains(a, state.base)};
}

ErgodicityReport judge_histogram(std::span<const std::uint64_t> counts, bool paired, const VerdictRule& rule) {
  if (counts.size() < 2) throw std::invalid_argument("need at least two bins");
  if (paired && counts.size() % 2 != 0) throw std::invalid_argument("paired histogram needs an even bin count");

  ErgodicityReport r;
  r.statistic = chi_square_uniform(counts);
  r.dof = counts.size() - 1;
  r.threshold = chi_square_upper_quantile(static_cast<double>(r.dof), rule.tail);

  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  bool heavy_empty = false;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) continue;
    ++r.empty_bins;
    if (paired && static_cast<double>(counts[i ^ 1]) > rule.heavy_mirror * expected) heavy_empty = true;
  }

  if (r.statistic < r.threshold) {
    r.verdict = ErgodicityVerdict::kErgodicConsistent;
  } else if (heavy_empty || r.statistic > rule.reject_factor * r.threshold) {
    r.verdict = ErgodicityVerdict::kNonErgodic;
  } else {
    r.verdict = ErgodicityVerdict::kInconclusive;
  }
  return r;
}

ErgodicityReport stepin_test(const System& system, const Set& a, const StepinParams& params, const VerdictRule& rule) {
  if (params.cells == 0 || params.orbit_length < 20 * static_cast<std::uint64_t>(params.cells)) {
    throw std::invalid_argument("orbit length must be at least 20 x cells");
  }
  const detail::CellBinner binner(system, params.cells);
  std::vector<std::uint64_t> counts(2 * params.cells, 0);

  detail::dispatch<void>(system, a, [&](auto start, auto step, auto member, auto sampler) {
    Rng rng(params.seed);
    decltype(start) x = sampler(rng);
    bool parity = false;
    for (std::uint64_t j = 0; j < params.orbit_length; ++j) {
      ++counts[2 * binner(x) + (parity ? 1 : 0)];
      parity = parity != member(x);
      x = step(x);
    }
  });

  ErgodicityReport r = judge_histogram(counts, true, rule);
  r.cells = params.cells;
  r.orbit_length = params.orbit_length;
  r.seed = params.seed;
  return r;
}

CoboundaryVerdict coboundary_verdict_from(ErgodicityVerdict v) noexcept {
  switch (v) {
    case ErgodicityVerdict::kErgodicConsistent:
      return CoboundaryVerdict::kNonCoboundaryConsistent;
    case ErgodicityVerdict::kNonErgodic:
      return CoboundaryVerdict::kCoboundaryConsistent;
    case ErgodicityVerdict::kInconclusive:
      break;
  }
  return CoboundaryVerdict::kInconclusive;
}

CoboundaryClassification classify_coboundary(const System& system, const Set& a, const StepinParams& params,
                                             const VerdictRule& rule) {
  CoboundaryClassification c;
  c.evidence = stepin_test(system, a, params, rule);
  c.verdict = coboundary_verdict_from(c.evidence.verdict);
  return c;
}

CatMapRung catmap_challenge_rung(std::size_t resolution, double a, double b, const StepinParams& continuous) {
  CatMapRung rung;
  rung.resolution = resolution;
  const GridSet y = GridSet::rectangle(resolution, a, b);
  rung.cells_in_set = y.bits().count();
  rung.measure = y.measure();

  const FinitePermutation grid = CatMap::cell_permutation(resolution);
  const auto cycles = grid.cycles();
  rung.cycle_count = cycles.size();

  // Orbit of 64 full skew periods per cycle: odd cycles balance exactly.
  constexpr std::uint64_t kPeriods = 64;
  std::size_t odd_cells = 0;
  bool consistent = true;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& cyc = cycles[c];
    const std::size_t len = cyc.size();
    BitVector on_cycle(len);
    for (std::size_t p = 0; p < len; ++p) {
      if (y.bits()[cyc[p]]) on_cycle.set(p);
    }
    CycleCheck check;
    check.length = len;
    check.odd = on_cycle.count() % 2 == 1;
    const StepinParams p{2 * kPeriods * len, len, Rng::derive(continuous.seed, c)};
    const ErgodicityReport r = stepin_test(FinitePermutation::cycle(len), FiniteSet(std::move(on_cycle)), p);
    check.verdict = r.verdict;
    check.statistic = r.statistic;
    const auto expected = check.odd ? ErgodicityVerdict::kErgodicConsistent : ErgodicityVerdict::kNonErgodic;
    consistent = consistent && check.verdict == expected;
    if (check.odd) {
      ++rung.odd_cycles;
      odd_cells += len;
    }
    rung.cycles.push_back(check);
  }
  rung.odd_cycle_mass = static_cast<double>(odd_cells) / static_cast<double>(grid.size());
  rung.finite_coboundary = rung.odd_cycles == 0;
  rung.finite_model_consistent = consistent;

  rung.continuous = stepin_test(CatMap{}, y, continuous);
  rung.continuous_verdict = coboundary_verdict_from(rung.continuous.verdict);
  return rung;
}

}  // namespace ergolab
