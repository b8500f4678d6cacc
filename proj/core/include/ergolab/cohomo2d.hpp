#pragma once

// Dynamical cochain complex of a pair of commuting permutations over GF(2):
//   C0 --d0--> C1 = C0 x C0 --d1--> C2
//   d0 C     = (C o S + C, C o T + C)
//   d1 (P,Q) = P + Q o S + P o T + Q
// On the M x N torus grid S and T are the two coordinate shifts.

#include <cstddef>
#include <optional>

#include "ergolab/bitvec.hpp"
#include "ergolab/dynsys.hpp"
#include "ergolab/gf2.hpp"

namespace ergolab {

class Action2D {
 public:
  // Throws std::invalid_argument unless S and T act on the same points and commute.
  Action2D(FinitePermutation s, FinitePermutation t);

  // Point (x, y) has index x * cols + y; S moves x -> x + 1, T moves y -> y + 1.
  static Action2D torus_grid(std::size_t rows, std::size_t cols);

  std::size_t size() const noexcept { return s_.size(); }
  const FinitePermutation& s() const noexcept { return s_; }
  const FinitePermutation& t() const noexcept { return t_; }

  // Grid shape when built by torus_grid.
  std::optional<std::pair<std::size_t, std::size_t>> grid_shape() const noexcept { return shape_; }

 private:
  FinitePermutation s_;
  FinitePermutation t_;
  std::optional<std::pair<std::size_t, std::size_t>> shape_;
};

struct Cochain0 {
  BitVector c;
  bool operator==(const Cochain0&) const = default;
};

struct Cochain1 {
  BitVector p;
  BitVector q;
  bool operator==(const Cochain1&) const = default;
};

struct Cochain2 {
  BitVector f;
  bool operator==(const Cochain2&) const = default;
};

struct CohomologyDims {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  bool operator==(const CohomologyDims&) const = default;
};

Cochain1 d0(const Action2D& action, const Cochain0& c);
Cochain2 d1(const Action2D& action, const Cochain1& pq);

// Matrices in the standard basis; 1-cochains are ordered (P[0..n), Q[0..n)).
Gf2Matrix d0_matrix(const Action2D& action);
Gf2Matrix d1_matrix(const Action2D& action);

// Lexicographically least (P, Q) in the variable order above with d1(P, Q) = F, if any.
std::optional<Cochain1> solve_curl(const Action2D& action, const Cochain2& f);

CohomologyDims cohomology_dims(const Action2D& action);

}  // namespace ergolab
