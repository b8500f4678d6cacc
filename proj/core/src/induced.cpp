#include "ergolab/induced.hpp"

#include <algorithm>
#include <cmath>

#include "detail/dynamics.hpp"
#include "ergolab/random.hpp"

namespace ergolab {

namespace {

template <class PointT, class Step, class Member>
std::uint64_t first_return(PointT& x, const Step& step, const Member& member, std::uint64_t cap) {
  for (std::uint64_t t = 1; t <= cap; ++t) {
    x = step(x);
    if (member(x)) return t;
  }
  throw CapExceededError(cap);
}

template <class PointT, class Member, class Sampler>
PointT rejection_sample(const Member& member, const Sampler& sampler, Rng& rng) {
  for (std::uint64_t k = 0; k < kRejectionLimit; ++k) {
    PointT x = sampler(rng);
    if (member(x)) return x;
  }
  throw SamplingError("no point of A found after " + std::to_string(kRejectionLimit) + " draws");
}

// Maps a point of A to a bin so that every bin carries equal conditional measure.
class ConditionalBinner {
 public:
  ConditionalBinner(const Set& a, std::size_t cells) : set_(&a), cells_(cells) {
    if (cells == 0) throw std::invalid_argument("need at least one cell");
    if (const auto* f = std::get_if<FiniteSet>(&a)) {
      init_ranks(f->bits());
    } else if (const auto* g = std::get_if<GridSet>(&a)) {
      init_ranks(g->bits());
    } else {
      mass_ = std::get<IntervalUnion>(a).measure();
    }
    if (std::holds_alternative<FiniteSet>(a) && cells > members_) {
      throw std::invalid_argument("more cells than elements of A");
    }
  }

  std::size_t operator()(std::size_t x) const noexcept { return rank_[x] * cells_ / members_; }

  std::size_t operator()(const TorusPoint& x) const {
    double u = 0;
    if (const auto* iu = std::get_if<IntervalUnion>(set_)) {
      u = iu->mass_below(x[0]) / mass_;
    } else {
      const auto& g = std::get<GridSet>(*set_);
      const std::size_t c = g.cell_of(x);
      const double scaled = x[x.dim() - 1] * static_cast<double>(g.resolution());
      const double frac = std::clamp(scaled - std::floor(scaled), 0.0, 1.0);
      u = (static_cast<double>(rank_[c]) + frac) / static_cast<double>(members_);
    }
    auto bin = static_cast<std::size_t>(u * static_cast<double>(cells_));
    return std::min(bin, cells_ - 1);
  }

 private:
  void init_ranks(const BitVector& bits) {
    rank_.assign(bits.size(), 0);
    for (std::size_t i = bits.find_first(); i != BitVector::npos; i = bits.find_next(i)) rank_[i] = members_++;
  }

  const Set* set_;
  std::size_t cells_;
  std::vector<std::size_t> rank_;
  std::size_t members_ = 0;
  double mass_ = 0;
};

}  // namespace

std::uint64_t default_return_cap(double measure) {
  constexpr std::uint64_t kFloor = 1'000'000;
  if (!(measure > 0)) return kFloor;
  const double c = std::ceil(100.0 / measure);
  if (c >= 1e18) return static_cast<std::uint64_t>(1e18);
  return std::max(kFloor, static_cast<std::uint64_t>(c));
}

ReturnRecord induced_apply(const System& system, const Set& a, const Point& x, std::uint64_t cap) {
  if (cap == 0) throw std::invalid_argument("return cap must be at least 1");
  if (!contains(a, x)) throw std::invalid_argument("induced map is defined only on points of A");
  return detail::dispatch<ReturnRecord>(system, a, [&](auto start, auto step, auto member, auto) {
    using P = decltype(start);
    P y = std::get<P>(x);
    const std::uint64_t t = first_return(y, step, member, cap);
    return ReturnRecord{x, t, Point(y)};
  });
}

Point sample_in(const System& system, const Set& a, Rng& rng) {
  return detail::dispatch<Point>(system, a, [&](auto start, auto, auto member, auto sampler) {
    return Point(rejection_sample<decltype(start)>(member, sampler, rng));
  });
}

ReturnStats return_time_stats(const System& system, const Set& a, std::uint64_t samples, std::uint64_t cap,
                              std::uint64_t seed) {
  const double m = measure(a);
  if (!(m > 0)) throw std::invalid_argument("return times need a set of positive measure");
  ReturnStats stats;
  stats.samples = samples;
  stats.cap = cap == 0 ? default_return_cap(m) : cap;
  stats.seed = seed;

  detail::dispatch<void>(system, a, [&](auto start, auto step, auto member, auto sampler) {
    using P = decltype(start);
    long double total = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
      Rng rng(Rng::derive(seed, s));
      P x = rejection_sample<P>(member, sampler, rng);
      try {
        const std::uint64_t t = first_return(x, step, member, stats.cap);
        ++stats.histogram[t];
        ++stats.count;
        total += static_cast<long double>(t);
      } catch (const CapExceededError&) {
        ++stats.cap_hits;
      }
    }
    stats.mean = stats.count ? static_cast<double>(total / static_cast<long double>(stats.count)) : 0.0;
  });
  return stats;
}

std::vector<Point> induced_orbit(const System& system, const Set& a, const Point& x, std::size_t steps,
                                 std::uint64_t cap) {
  if (cap == 0) throw std::invalid_argument("return cap must be at least 1");
  if (steps == 0) return {};
  if (!contains(a, x)) throw std::invalid_argument("induced orbit must start in A");
  return detail::dispatch<std::vector<Point>>(system, a, [&](auto start, auto step, auto member, auto) {
    using P = decltype(start);
    std::vector<Point> orbit;
    orbit.reserve(steps);
    P y = std::get<P>(x);
    orbit.emplace_back(y);
    while (orbit.size() < steps) {
      first_return(y, step, member, cap);
      orbit.emplace_back(y);
    }
    return orbit;
  });
}

ErgodicityReport ta2_ergodicity_experiment(const System& system, const Set& a, const StepinParams& params,
                                           std::uint64_t cap, const VerdictRule& rule) {
  if (params.cells < 2 || params.orbit_length < 20 * static_cast<std::uint64_t>(params.cells)) {
    throw std::invalid_argument("need at least two cells and orbit length >= 20 x cells");
  }
  const double m = measure(a);
  if (!(m > 0)) throw std::invalid_argument("induced map needs a set of positive measure");
  if (cap == 0) cap = default_return_cap(m);
  const ConditionalBinner binner(a, params.cells);
  std::vector<std::uint64_t> counts(params.cells, 0);

  detail::dispatch<void>(system, a, [&](auto start, auto step, auto member, auto sampler) {
    using P = decltype(start);
    Rng rng(params.seed);
    P x = rejection_sample<P>(member, sampler, rng);
    for (std::uint64_t j = 0; j < params.orbit_length; ++j) {
      ++counts[binner(x)];
      first_return(x, step, member, cap);
      first_return(x, step, member, cap);
    }
  });

  ErgodicityReport r = judge_histogram(counts, false, rule);
  r.cells = params.cells;
  r.orbit_length = params.orbit_length;
  r.seed = params.seed;
  return r;
}

}  // namespace ergolab
