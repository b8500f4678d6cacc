#include "ergolab/dynsys.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
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

}  // namespace

TorusPoint::TorusPoint(std::initializer_list<double> coords)
    : TorusPoint(std::span<const double>(coords.begin(), coords.size())) {}

TorusPoint::TorusPoint(std::span<const double> coords) : dim_(coords.size()) {
  if (coords.size() > kMaxTorusDim) {
    throw std::invalid_argument("torus dimension exceeds " + std::to_string(kMaxTorusDim));
  }
  for (std::size_t i = 0; i < dim_; ++i) coords_[i] = wrap_unit(coords[i]);
}

bool TorusPoint::operator==(const TorusPoint& other) const noexcept {
  return dim_ == other.dim_ && std::equal(coords_.begin(), coords_.begin() + dim_, other.coords_.begin());
}

// FinitePermutation

FinitePermutation::FinitePermutation(std::vector<std::size_t> sigma) : sigma_(std::move(sigma)) {
  const std::size_t n = sigma_.size();
  if (n == 0) throw std::invalid_argument("permutation needs at least one point");
  inverse_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t y = sigma_[i];
    if (y >= n) throw std::invalid_argument("permutation image " + std::to_string(y) + " out of range");
    if (inverse_[y] != n) throw std::invalid_argument("permutation repeats image " + std::to_string(y));
    inverse_[y] = i;
  }
}

FinitePermutation FinitePermutation::identity(std::size_t n) {
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), std::size_t{0});
  return FinitePermutation(std::move(s));
}

FinitePermutation FinitePermutation::cycle(std::size_t n) {
  std::vector<std::size_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (i + 1) % n;
  return FinitePermutation(std::move(s));
}

FinitePermutation FinitePermutation::random(std::size_t n, Rng& rng) {
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(s[i - 1], s[rng.below(i)]);
  return FinitePermutation(std::move(s));
}

std::size_t FinitePermutation::apply(std::size_t x) const {
  if (x >= sigma_.size()) throw std::out_of_range("state index out of range");
  return sigma_[x];
}

std::size_t FinitePermutation::apply_inverse(std::size_t x) const {
  if (x >= sigma_.size()) throw std::out_of_range("state index out of range");
  return inverse_[x];
}

std::vector<std::vector<std::size_t>> FinitePermutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(sigma_.size(), false);
  for (std::size_t start = 0; start < sigma_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> c;
    for (std::size_t x = start; !seen[x]; x = sigma_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t FinitePermutation::cycle_count() const {
  std::size_t k = 0;
  std::vector<bool> seen(sigma_.size(), false);
  for (std::size_t start = 0; start < sigma_.size(); ++start) {
    if (seen[start]) continue;
    ++k;
    for (std::size_t x = start; !seen[x]; x = sigma_[x]) seen[x] = true;
  }
  return k;
}

int FinitePermutation::sign() const {
  // A cycle of length l is a product of l - 1 transpositions.
  return (sigma_.size() - cycle_count()) % 2 == 0 ? 1 : -1;
}

// TorusRotation

TorusRotation::TorusRotation(std::vector<double> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty() || alpha_.size() > kMaxTorusDim) {
    throw std::invalid_argument("rotation dimension must be between 1 and " + std::to_string(kMaxTorusDim));
  }
  for (double a : alpha_) {
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("rotation components must lie in [0,1)");
  }
}

TorusRotation TorusRotation::golden() { return TorusRotation({kGoldenMean}); }

void TorusRotation::check_dim(const TorusPoint& x) const {
  if (x.dim() != alpha_.size()) throw std::invalid_argument("point dimension does not match rotation");
}

TorusPoint TorusRotation::apply(const TorusPoint& x) const {
  check_dim(x);
  TorusPoint y = x;
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    double v = x.coords_[i] + alpha_[i];
    if (v >= 1.0) v -= 1.0;
    y.coords_[i] = v;
  }
  return y;
}

TorusPoint TorusRotation::apply_inverse(const TorusPoint& x) const {
  check_dim(x);
  TorusPoint y = x;
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    double v = x.coords_[i] - alpha_[i];
    if (v < 0.0) v += 1.0;
    y.coords_[i] = v >= 1.0 ? 0.0 : v;
  }
  return y;
}

// CatMap

TorusPoint CatMap::apply(const TorusPoint& p) const {
  if (p.dim() != 2) throw std::invalid_argument("cat map acts on 2-torus points");
  TorusPoint q;
  q.dim_ = 2;
  q.coords_[0] = wrap_unit(2.0 * p.coords_[0] + p.coords_[1]);
  q.coords_[1] = wrap_unit(p.coords_[0] + p.coords_[1]);
  return q;
}

TorusPoint CatMap::apply_inverse(const TorusPoint& p) const {
  if (p.dim() != 2) throw std::invalid_argument("cat map acts on 2-torus points");
  TorusPoint q;
  q.dim_ = 2;
  q.coords_[0] = wrap_unit(p.coords_[0] - p.coords_[1]);
  q.coords_[1] = wrap_unit(2.0 * p.coords_[1] - p.coords_[0]);
  return q;
}

FinitePermutation CatMap::cell_permutation(std::size_t n) {
  if (n == 0) throw std::invalid_argument("grid resolution must be positive");
  std::vector<std::size_t> s(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s[i * n + j] = ((2 * i + j) % n) * n + (i + j) % n;
    }
  }
  return FinitePermutation(std::move(s));
}

// System dispatch

Point apply(const System& system, const Point& x) {
  return std::visit(
      overloaded{
          [&](const FinitePermutation& p) -> Point {
            const auto* i = std::get_if<std::size_t>(&x);
            if (!i) throw std::invalid_argument("finite system needs a state index");
            return p.apply(*i);
          },
          [&](const auto& torus_map) -> Point {
            const auto* t = std::get_if<TorusPoint>(&x);
            if (!t) throw std::invalid_argument("torus system needs a torus point");
            return torus_map.apply(*t);
          },
      },
      system);
}

Point apply_inverse(const System& system, const Point& x) {
  return std::visit(
      overloaded{
          [&](const FinitePermutation& p) -> Point {
            const auto* i = std::get_if<std::size_t>(&x);
            if (!i) throw std::invalid_argument("finite system needs a state index");
            return p.apply_inverse(*i);
          },
          [&](const auto& torus_map) -> Point {
            const auto* t = std::get_if<TorusPoint>(&x);
            if (!t) throw std::invalid_argument("torus system needs a torus point");
            return torus_map.apply_inverse(*t);
          },
      },
      system);
}

Point iterate(const System& system, const Point& x, std::int64_t n) {
  Point y = x;
  if (n == 0) {
    (void)ergolab::apply(system, x);  // validates the point
  } else if (n > 0) {
    for (std::int64_t k = 0; k < n; ++k) y = ergolab::apply(system, y);
  } else {
    for (std::int64_t k = 0; k > n; --k) y = ergolab::apply_inverse(system, y);
  }
  return y;
}

bool is_finite(const System& system) noexcept { return std::holds_alternative<FinitePermutation>(system); }

std::size_t phase_dim(const System& system) noexcept {
  return std::visit(overloaded{
                        [](const FinitePermutation&) -> std::size_t { return 0; },
                        [](const TorusRotation& r) -> std::size_t { return r.dim(); },
                        [](const CatMap&) -> std::size_t { return 2; },
                    },
                    system);
}

Point random_point(const System& system, Rng& rng) {
  if (const auto* p = std::get_if<FinitePermutation>(&system)) return static_cast<std::size_t>(rng.below(p->size()));
  std::array<double, kMaxTorusDim> c{};
  const std::size_t d = phase_dim(system);
  for (std::size_t i = 0; i < d; ++i) c[i] = rng.uniform();
  return TorusPoint(std::span<const double>(c.data(), d));
}

}  // namespace ergolab
