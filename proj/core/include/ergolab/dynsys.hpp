#pragma once

// Measure-preserving model systems: permutations of finite sets, translations
// of the d-torus and the Arnold cat map on the 2-torus.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

namespace ergolab {

class Rng;

// (sqrt(5) - 1) / 2, the canonical badly approximable rotation number.
inline constexpr double kGoldenMean = 0.61803398874989484820;

inline constexpr std::size_t kMaxTorusDim = 4;

// Reduces into [0, 1). Guards the x - floor(x) == 1.0 rounding case for tiny negatives.
inline double wrap_unit(double x) noexcept {
  double r = x - static_cast<double>(static_cast<std::int64_t>(x));
  if (r < 0) r += 1.0;
  return r >= 1.0 ? 0.0 : r;
}

// Point of the d-torus, d <= kMaxTorusDim, every coordinate in [0, 1).
class TorusPoint {
 public:
  TorusPoint() = default;
  TorusPoint(std::initializer_list<double> coords);
  explicit TorusPoint(std::span<const double> coords);

  std::size_t dim() const noexcept { return dim_; }
  double operator[](std::size_t i) const noexcept { return coords_[i]; }
  std::span<const double> coords() const noexcept { return {coords_.data(), dim_}; }

  bool operator==(const TorusPoint& other) const noexcept;

 private:
  friend class TorusRotation;
  friend class CatMap;

  std::array<double, kMaxTorusDim> coords_{};
  std::size_t dim_ = 0;
};

class FinitePermutation {
 public:
  // Throws std::invalid_argument unless sigma is a bijection of {0,...,n-1}, n >= 1.
  explicit FinitePermutation(std::vector<std::size_t> sigma);

  static FinitePermutation identity(std::size_t n);
  // 0 -> 1 -> ... -> n-1 -> 0
  static FinitePermutation cycle(std::size_t n);
  static FinitePermutation random(std::size_t n, Rng& rng);

  std::size_t size() const noexcept { return sigma_.size(); }
  std::span<const std::size_t> images() const noexcept { return sigma_; }

  std::size_t apply(std::size_t x) const;
  std::size_t apply_inverse(std::size_t x) const;
  // Unchecked hot-loop variants.
  std::size_t operator()(std::size_t x) const noexcept { return sigma_[x]; }
  std::size_t inverse(std::size_t x) const noexcept { return inverse_[x]; }

  // Each cycle in orbit order from its least element; cycles sorted by that element.
  std::vector<std::vector<std::size_t>> cycles() const;
  std::size_t cycle_count() const;
  int sign() const;

  bool operator==(const FinitePermutation& other) const noexcept { return sigma_ == other.sigma_; }

 private:
  std::vector<std::size_t> sigma_;
  std::vector<std::size_t> inverse_;
};

class TorusRotation {
 public:
  // Each component must lie in [0, 1).
  explicit TorusRotation(std::vector<double> alpha);
  static TorusRotation golden();

  std::size_t dim() const noexcept { return alpha_.size(); }
  std::span<const double> alpha() const noexcept { return alpha_; }

  TorusPoint apply(const TorusPoint& x) const;
  TorusPoint apply_inverse(const TorusPoint& x) const;

 private:
  void check_dim(const TorusPoint& x) const;
  std::vector<double> alpha_;
};

// (x, y) -> (2x + y, x + y) mod 1, inverse (x - y, -x + 2y) mod 1.
class CatMap {
 public:
  TorusPoint apply(const TorusPoint& p) const;
  TorusPoint apply_inverse(const TorusPoint& p) const;

  // Action of the integer matrix on the cells of an N x N grid, cell (i, j)
  // indexed i * N + j: (i, j) -> (2i + j, i + j) mod N.
  static FinitePermutation cell_permutation(std::size_t n);

  bool operator==(const CatMap&) const noexcept { return true; }
};

using System = std::variant<FinitePermutation, TorusRotation, CatMap>;
// A finite state index or a torus point, matching the system kind.
using Point = std::variant<std::size_t, TorusPoint>;

Point apply(const System& system, const Point& x);
Point apply_inverse(const System& system, const Point& x);
// T^n(x); negative n iterates the inverse.
Point iterate(const System& system, const Point& x, std::int64_t n);

bool is_finite(const System& system) noexcept;
// Dimension of the phase space: 0 for finite systems.
std::size_t phase_dim(const System& system) noexcept;
Point random_point(const System& system, Rng& rng);

}  // namespace ergolab
