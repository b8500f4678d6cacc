#include "ergolab/msets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ergolab/random.hpp"

namespace ergolab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t checked_grid_index(double v, std::size_t n, const char* what) {
  const double scaled = v * static_cast<double>(n);
  const double rounded = std::round(scaled);
  if (std::abs(scaled - rounded) > 1e-9 || rounded < 0 || rounded > static_cast<double>(n)) {
    throw std::invalid_argument(std::string(what) + " is not a multiple of 1/N inside [0,1]");
  }
  return static_cast<std::size_t>(rounded);
}

std::size_t cell_coord(double x, std::size_t n) {
  auto i = static_cast<std::size_t>(x * static_cast<double>(n));
  return i < n ? i : n - 1;
}

}  // namespace

// FiniteSet

FiniteSet FiniteSet::of(std::size_t n, std::span<const std::size_t> elements) {
  return FiniteSet(BitVector::from_indices(n, elements));
}

FiniteSet FiniteSet::of(std::size_t n, std::initializer_list<std::size_t> elements) {
  return of(n, std::span<const std::size_t>(elements.begin(), elements.size()));
}

FiniteSet FiniteSet::full(std::size_t n) {
  FiniteSet s(n);
  for (std::size_t i = 0; i < n; ++i) s.bits_.set(i);
  return s;
}

double FiniteSet::measure() const noexcept {
  if (bits_.empty()) return 0.0;
  return static_cast<double>(bits_.count()) / static_cast<double>(bits_.size());
}

// IntervalUnion

IntervalUnion::IntervalUnion(std::vector<Interval> intervals, std::size_t capacity) : capacity_(capacity) {
  for (const auto& iv : intervals) {
    if (!(iv.lo >= 0.0 && iv.lo < iv.hi && iv.hi <= 1.0)) {
      throw std::invalid_argument("interval [" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) +
                                  ") must satisfy 0 <= a < b <= 1");
    }
  }
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const auto& iv : intervals) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi) {
      intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
    } else {
      intervals_.push_back(iv);
    }
  }
  finish();
}

IntervalUnion::IntervalUnion(Normalized, std::vector<Interval> intervals, std::size_t capacity)
    : intervals_(std::move(intervals)), capacity_(capacity) {
  finish();
}

// Input is sorted and disjoint; merge near-touching pieces, drop slivers.
void IntervalUnion::finish() {
  std::vector<Interval> merged;
  merged.reserve(intervals_.size());
  for (const auto& iv : intervals_) {
    if (!merged.empty() && iv.lo - merged.back().hi < kTolerance) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  std::erase_if(merged, [](const Interval& iv) { return iv.hi - iv.lo < kTolerance; });
  if (merged.size() > capacity_) {
    throw std::length_error("interval union exceeds capacity of " + std::to_string(capacity_) + " intervals");
  }
  intervals_ = std::move(merged);
  prefix_.assign(intervals_.size() + 1, 0.0);
  for (std::size_t k = 0; k < intervals_.size(); ++k) {
    prefix_[k + 1] = prefix_[k] + (intervals_[k].hi - intervals_[k].lo);
  }
}

IntervalUnion IntervalUnion::full() { return IntervalUnion({{0.0, 1.0}}); }

double IntervalUnion::measure() const noexcept { return prefix_.empty() ? 0.0 : prefix_.back(); }

bool IntervalUnion::contains(double x) const noexcept {
  // First interval with lo > x; the candidate is the one before it.
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](double v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return x < it->hi;
}

double IntervalUnion::mass_below(double x) const noexcept {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](double v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return 0.0;
  const auto k = static_cast<std::size_t>(it - intervals_.begin()) - 1;
  return prefix_[k] + std::min(x, intervals_[k].hi) - intervals_[k].lo;
}

// GridSet

GridSet::GridSet(std::size_t n, std::size_t dim) : n_(n), dim_(dim) {
  if (n == 0) throw std::invalid_argument("grid resolution must be positive");
  if (dim != 1 && dim != 2) throw std::invalid_argument("grid sets support dimension 1 or 2");
  bits_ = BitVector(dim == 1 ? n : n * n);
}

GridSet::GridSet(std::size_t n, std::size_t dim, BitVector bits) : GridSet(n, dim) {
  if (bits.size() != bits_.size()) throw std::invalid_argument("grid bit vector length must be N^d");
  bits_ = std::move(bits);
}

GridSet GridSet::rectangle(std::size_t n, double a, double b) {
  GridSet g(n, 2);
  const std::size_t ia = checked_grid_index(a, n, "rectangle width");
  const std::size_t ib = checked_grid_index(b, n, "rectangle height");
  for (std::size_t i = 0; i < ia; ++i) {
    for (std::size_t j = 0; j < ib; ++j) g.bits_.set(i * n + j);
  }
  return g;
}

GridSet GridSet::segment(std::size_t n, double a) {
  GridSet g(n, 1);
  const std::size_t ia = checked_grid_index(a, n, "segment length");
  for (std::size_t i = 0; i < ia; ++i) g.bits_.set(i);
  return g;
}

GridSet GridSet::random(std::size_t n, std::size_t dim, double p, Rng& rng) {
  GridSet g(n, dim);
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    if (rng.uniform() < p) g.bits_.set(c);
  }
  return g;
}

double GridSet::measure() const noexcept {
  return static_cast<double>(bits_.count()) / static_cast<double>(bits_.size());
}

std::size_t GridSet::cell_of(const TorusPoint& x) const {
  if (x.dim() != dim_) throw std::invalid_argument("point dimension does not match grid set");
  if (dim_ == 1) return cell_coord(x[0], n_);
  return cell_coord(x[0], n_) * n_ + cell_coord(x[1], n_);
}

// Symmetric difference

FiniteSet symdiff(const FiniteSet& a, const FiniteSet& b) {
  if (a.universe() != b.universe()) throw std::invalid_argument("finite sets over different universes");
  return FiniteSet(a.bits() ^ b.bits());
}

IntervalUnion symdiff(const IntervalUnion& a, const IntervalUnion& b) {
  // Membership in A + B is the parity of the number of intervals covering a point,
  // which flips at every endpoint of either union.
  std::vector<double> ends;
  ends.reserve(2 * (a.intervals_.size() + b.intervals_.size()));
  for (const auto* u : {&a, &b}) {
    for (const auto& iv : u->intervals_) {
      ends.push_back(iv.lo);
      ends.push_back(iv.hi);
    }
  }
  std::sort(ends.begin(), ends.end());
  std::vector<Interval> out;
  bool inside = false;
  std::size_t k = 0;
  while (k < ends.size()) {
    const double x = ends[k];
    std::size_t flips = 0;
    while (k < ends.size() && ends[k] == x) {
      ++flips;
      ++k;
    }
    if (flips % 2 == 0) continue;
    if (inside) {
      out.back().hi = x;
    } else {
      out.push_back({x, x});
    }
    inside = !inside;
  }
  return IntervalUnion(IntervalUnion::Normalized{}, std::move(out), std::min(a.capacity(), b.capacity()));
}

GridSet symdiff(const GridSet& a, const GridSet& b) {
  if (a.resolution() != b.resolution() || a.dim() != b.dim()) {
    throw std::invalid_argument("grid sets of different resolution or dimension");
  }
  return GridSet(a.resolution(), a.dim(), a.bits() ^ b.bits());
}

Set symdiff(const Set& a, const Set& b) {
  return std::visit(
      [](const auto& x, const auto& y) -> Set {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Y>) {
          return symdiff(x, y);
        } else {
          throw std::invalid_argument("symmetric difference of different set representations");
        }
      },
      a, b);
}

double measure(const Set& a) noexcept {
  return std::visit([](const auto& s) { return s.measure(); }, a);
}

double distance(const Set& a, const Set& b) { return measure(symdiff(a, b)); }

// Pushforward

FiniteSet pushforward(const FinitePermutation& t, const FiniteSet& a) {
  if (a.universe() != t.size()) throw std::invalid_argument("finite set universe does not match permutation");
  BitVector out(t.size());
  for (std::size_t x : a.elements()) out.set(t(x));
  return FiniteSet(std::move(out));
}

IntervalUnion pushforward(const TorusRotation& t, const IntervalUnion& a) {
  if (t.dim() != 1) throw std::invalid_argument("interval unions move only under circle rotations");
  const double alpha = t.alpha()[0];
  std::vector<Interval> low;
  std::vector<Interval> high;
  for (const auto& iv : a.intervals_) {
    double lo = iv.lo + alpha;
    double hi = iv.hi + alpha;
    if (lo >= 1.0) {
      low.push_back({lo - 1.0, std::min(hi - 1.0, 1.0)});
    } else if (hi > 1.0) {
      high.push_back({lo, 1.0});
      low.push_back({0.0, hi - 1.0});
    } else {
      high.push_back({lo, hi});
    }
  }
  // Both pieces are already sorted; wrapped intervals all precede unwrapped ones.
  low.insert(low.end(), high.begin(), high.end());
  std::vector<Interval> sorted;
  sorted.reserve(low.size());
  for (const auto& iv : low) {
    if (!sorted.empty() && iv.lo < sorted.back().hi) {
      sorted.back().hi = std::max(sorted.back().hi, iv.hi);  // rounding overlap at the seam
    } else {
      sorted.push_back(iv);
    }
  }
  return IntervalUnion(IntervalUnion::Normalized{}, std::move(sorted), a.capacity());
}

GridSet pushforward(const CatMap&, const GridSet& a) {
  if (a.dim() != 2) throw std::invalid_argument("cat map moves only two-dimensional grid sets");
  const std::size_t n = a.resolution();
  BitVector out(n * n);
  for (std::size_t c : a.bits().indices()) {
    const std::size_t i = c / n;
    const std::size_t j = c % n;
    out.set(((2 * i + j) % n) * n + (i + j) % n);
  }
  return GridSet(n, 2, std::move(out));
}

Set pushforward(const System& t, const Set& a) {
  return std::visit(
      [](const auto& sys, const auto& set) -> Set {
        using S = std::decay_t<decltype(sys)>;
        using A = std::decay_t<decltype(set)>;
        if constexpr (std::is_same_v<S, FinitePermutation> && std::is_same_v<A, FiniteSet>) {
          return pushforward(sys, set);
        } else if constexpr (std::is_same_v<S, TorusRotation> && std::is_same_v<A, IntervalUnion>) {
          return pushforward(sys, set);
        } else if constexpr (std::is_same_v<S, CatMap> && std::is_same_v<A, GridSet>) {
          return pushforward(sys, set);
        } else {
          throw std::invalid_argument("set representation is not compatible with this system");
        }
      },
      t, a);
}

bool contains(const Set& a, const Point& x) {
  return std::visit(overloaded{
                        [&](const FiniteSet& s) {
                          const auto* i = std::get_if<std::size_t>(&x);
                          if (!i) throw std::invalid_argument("finite set membership needs a state index");
                          return s.contains(*i);
                        },
                        [&](const IntervalUnion& s) {
                          const auto* p = std::get_if<TorusPoint>(&x);
                          if (!p || p->dim() != 1) throw std::invalid_argument("interval membership needs a circle point");
                          return s.contains((*p)[0]);
                        },
                        [&](const GridSet& s) {
                          const auto* p = std::get_if<TorusPoint>(&x);
                          if (!p) throw std::invalid_argument("grid membership needs a torus point");
                          return s.contains(*p);
                        },
                    },
                    a);
}

Set full_like(const Set& like) {
  return std::visit(overloaded{
                        [](const FiniteSet& s) -> Set { return FiniteSet::full(s.universe()); },
                        [](const IntervalUnion&) -> Set { return IntervalUnion::full(); },
                        [](const GridSet& s) -> Set {
                          BitVector b(s.cell_count());
                          for (std::size_t c = 0; c < b.size(); ++c) b.set(c);
                          return GridSet(s.resolution(), s.dim(), std::move(b));
                        },
                    },
                    like);
}

Set empty_like(const Set& like) {
  return std::visit(overloaded{
                        [](const FiniteSet& s) -> Set { return FiniteSet(s.universe()); },
                        [](const IntervalUnion&) -> Set { return IntervalUnion(); },
                        [](const GridSet& s) -> Set { return GridSet(s.resolution(), s.dim()); },
                    },
                    like);
}

}  // namespace ergolab
