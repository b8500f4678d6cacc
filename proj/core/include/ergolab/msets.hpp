#pragma once

// Measurable-set representations. Under symmetric difference each one forms
// a Boolean group, with the metric d(A, B) = m(A + B).

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "ergolab/bitvec.hpp"
#include "ergolab/dynsys.hpp"

namespace ergolab {

// Subset of the state space {0,...,n-1} of a finite system, normalized counting measure.
class FiniteSet {
 public:
  explicit FiniteSet(std::size_t n) : bits_(n) {}
  explicit FiniteSet(BitVector bits) : bits_(std::move(bits)) {}
  static FiniteSet of(std::size_t n, std::span<const std::size_t> elements);
  static FiniteSet of(std::size_t n, std::initializer_list<std::size_t> elements);
  static FiniteSet full(std::size_t n);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool contains(std::size_t x) const { return bits_.test(x); }
  double measure() const noexcept;

  const BitVector& bits() const noexcept { return bits_; }
  std::vector<std::size_t> elements() const { return bits_.indices(); }

  bool operator==(const FiniteSet&) const = default;

 private:
  BitVector bits_;
};

struct Interval {
  double lo;
  double hi;
  bool operator==(const Interval&) const = default;
};

// Finite union of half-open intervals [lo, hi) in [0, 1), kept sorted and disjoint.
// Gaps and pieces shorter than kTolerance are absorbed, so sets that differ by
// less than machine-level slivers compare equal.
class IntervalUnion {
 public:
  static constexpr double kTolerance = 1e-12;
  static constexpr std::size_t kDefaultCapacity = 1'000'000;

  IntervalUnion() = default;
  // Accepts unsorted, overlapping input and stores its union. Requires 0 <= lo < hi <= 1.
  explicit IntervalUnion(std::vector<Interval> intervals, std::size_t capacity = kDefaultCapacity);
  static IntervalUnion full();

  std::span<const Interval> intervals() const noexcept { return intervals_; }
  std::size_t capacity() const noexcept { return capacity_; }
  bool empty() const noexcept { return intervals_.empty(); }
  double measure() const noexcept;

  bool contains(double x) const noexcept;
  // m(A intersected with [0, x)).
  double mass_below(double x) const noexcept;

  bool operator==(const IntervalUnion& other) const noexcept { return intervals_ == other.intervals_; }

 private:
  struct Normalized {};
  IntervalUnion(Normalized, std::vector<Interval> intervals, std::size_t capacity);
  void finish();

  friend IntervalUnion symdiff(const IntervalUnion&, const IntervalUnion&);
  friend IntervalUnion pushforward(const TorusRotation&, const IntervalUnion&);

  std::vector<Interval> intervals_;
  std::vector<double> prefix_;  // prefix_[k] = total length of intervals_[0..k)
  std::size_t capacity_ = kDefaultCapacity;
};

// Union of cells of the uniform N^d grid, d in {1, 2}. Cell (i, j) is
// [i/N, (i+1)/N) x [j/N, (j+1)/N) with index i * N + j.
class GridSet {
 public:
  GridSet(std::size_t n, std::size_t dim);
  GridSet(std::size_t n, std::size_t dim, BitVector bits);

  // Cells of [0, a) x [0, b); a * N and b * N must be integers.
  static GridSet rectangle(std::size_t n, double a, double b);
  // Cells of [0, a) on the circle.
  static GridSet segment(std::size_t n, double a);
  // Each cell independently with probability p.
  static GridSet random(std::size_t n, std::size_t dim, double p, Rng& rng);

  std::size_t resolution() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t cell_count() const noexcept { return bits_.size(); }
  const BitVector& bits() const noexcept { return bits_; }
  double measure() const noexcept;

  std::size_t cell_of(const TorusPoint& x) const;
  bool contains(const TorusPoint& x) const { return bits_[cell_of(x)]; }
  bool contains_cell(std::size_t cell) const { return bits_.test(cell); }

  bool operator==(const GridSet&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  BitVector bits_;
};

using Set = std::variant<FiniteSet, IntervalUnion, GridSet>;

FiniteSet symdiff(const FiniteSet& a, const FiniteSet& b);
IntervalUnion symdiff(const IntervalUnion& a, const IntervalUnion& b);
GridSet symdiff(const GridSet& a, const GridSet& b);
Set symdiff(const Set& a, const Set& b);

double measure(const Set& a) noexcept;
double distance(const Set& a, const Set& b);

FiniteSet pushforward(const FinitePermutation& t, const FiniteSet& a);
IntervalUnion pushforward(const TorusRotation& t, const IntervalUnion& a);
GridSet pushforward(const CatMap& t, const GridSet& a);
// T(A). Supported pairs: permutation/finite set, circle rotation/interval union,
// cat map/2D grid set. Anything else throws std::invalid_argument.
Set pushforward(const System& t, const Set& a);

bool contains(const Set& a, const Point& x);

// The whole space in the representation natural to `like`.
Set full_like(const Set& like);
Set empty_like(const Set& like);

}  // namespace ergolab
