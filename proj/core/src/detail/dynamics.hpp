#pragma once

// Monomorphized stepping for the (system, set) pairs that support orbit
// simulation. `fn(start, step, member, sampler)` receives:
//   start   - a value of the point type, used only for type deduction
//   step    - callable x -> T(x)
//   member  - callable x -> 1_A(x)
//   sampler - callable Rng& -> uniform random point of the phase space

#include <array>
#include <cmath>
#include <string>
#include <stdexcept>
#include <type_traits>
#include <variant>

#include "ergolab/dynsys.hpp"
#include "ergolab/msets.hpp"
#include "ergolab/random.hpp"

namespace ergolab::detail {

template <class R, class Fn>
R dispatch(const System& system, const Set& set, Fn&& fn) {
  return std::visit(
      [&](const auto& sys, const auto& a) -> R {
        using S = std::decay_t<decltype(sys)>;
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<S, FinitePermutation> && std::is_same_v<A, FiniteSet>) {
          if (a.universe() != sys.size()) throw std::invalid_argument("finite set universe does not match permutation");
          const std::size_t n = sys.size();
          return fn(
              std::size_t{0}, [&sys](std::size_t x) { return sys(x); },
              [&a](std::size_t x) { return a.bits()[x]; },
              [n](Rng& rng) { return static_cast<std::size_t>(rng.below(n)); });
        } else if constexpr (std::is_same_v<S, FinitePermutation> || std::is_same_v<A, FiniteSet>) {
          throw std::invalid_argument("finite sets pair only with finite permutations");
        } else {
          std::size_t d = 0;
          if constexpr (std::is_same_v<S, TorusRotation>) {
            d = sys.dim();
          } else {
            d = 2;
          }
          auto sampler = [d](Rng& rng) {
            std::array<double, kMaxTorusDim> c{};
            for (std::size_t i = 0; i < d; ++i) c[i] = rng.uniform();
            return TorusPoint(std::span<const double>(c.data(), d));
          };
          auto step = [&sys](const TorusPoint& x) { return sys.apply(x); };
          if constexpr (std::is_same_v<A, IntervalUnion>) {
            if (d != 1) throw std::invalid_argument("interval unions live on the circle");
            return fn(TorusPoint{}, step, [&a](const TorusPoint& x) { return a.contains(x[0]); }, sampler);
          } else {
            if (a.dim() != d) throw std::invalid_argument("grid set dimension does not match the system");
            return fn(TorusPoint{}, step, [&a](const TorusPoint& x) { return a.contains(x); }, sampler);
          }
        }
      },
      system, set);
}

// Partition of the phase space into `cells` equal-measure bins.
class CellBinner {
 public:
  CellBinner(const System& system, std::size_t cells) : cells_(cells) {
    if (cells == 0) throw std::invalid_argument("need at least one cell");
    if (const auto* p = std::get_if<FinitePermutation>(&system)) {
      states_ = p->size();
      if (cells > states_) throw std::invalid_argument("more cells than states");
      return;
    }
    dim_ = phase_dim(system);
    side_ = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(cells), 1.0 / static_cast<double>(dim_))));
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim_; ++i) total *= side_;
    if (total != cells) {
      throw std::invalid_argument("cell count must be a perfect " + std::to_string(dim_) + "-th power on the torus");
    }
  }

  std::size_t cells() const noexcept { return cells_; }

  std::size_t operator()(std::size_t x) const noexcept { return x * cells_ / states_; }
  std::size_t operator()(const TorusPoint& x) const noexcept {
    std::size_t bin = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      auto c = static_cast<std::size_t>(x[i] * static_cast<double>(side_));
      if (c >= side_) c = side_ - 1;
      bin = bin * side_ + c;
    }
    return bin;
  }

 private:
  std::size_t cells_;
  std::size_t states_ = 0;
  std::size_t dim_ = 0;
  std::size_t side_ = 0;
};

}  // namespace ergolab::detail
