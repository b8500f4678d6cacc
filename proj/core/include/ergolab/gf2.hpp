#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ergolab/bitvec.hpp"

namespace ergolab {

// Dense matrix over GF(2), stored as bit-packed rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_.at(r).test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_.at(r).set(c, value); }
  void flip(std::size_t r, std::size_t c) { rows_.at(r).flip(c); }

  const BitVector& row(std::size_t r) const { return rows_.at(r); }
  BitVector& row(std::size_t r) { return rows_.at(r); }

  BitVector multiply(const BitVector& x) const;

 private:
  std::vector<BitVector> rows_;
  std::size_t cols_ = 0;
};

// Reduced row echelon form with pivots taken in ascending column order.
struct RowEchelon {
  Gf2Matrix reduced;
  std::vector<std::size_t> pivot_cols;  // pivot column of row i, ascending
};

RowEchelon row_reduce(Gf2Matrix m);

std::size_t rank(const Gf2Matrix& m);

// Basis of {x : m x = 0}, one vector per free column.
std::vector<BitVector> kernel_basis(const Gf2Matrix& m);

// Solves m x = rhs. Among all solutions returns the lexicographically least one,
// comparing coordinates from index 0 upward with 0 < 1. Empty when inconsistent.
std::optional<BitVector> solve_lex_least(const Gf2Matrix& m, const BitVector& rhs);

}  // namespace ergolab
