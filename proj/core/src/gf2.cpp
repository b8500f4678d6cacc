#include "ergolab/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace ergolab {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows, BitVector(cols)), cols_(cols) {}

BitVector Gf2Matrix::multiply(const BitVector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("GF(2) matrix-vector size mismatch");
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    const auto a = rows_[r].words();
    const auto b = x.words();
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < a.size(); ++k) acc ^= a[k] & b[k];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

namespace {

// Eliminates in place; when `rhs` is non-null it receives the same row operations.
std::vector<std::size_t> eliminate(Gf2Matrix& m, BitVector* rhs) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
    std::size_t found = m.rows();
    for (std::size_t r = next_row; r < m.rows(); ++r) {
      if (m.row(r)[c]) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    if (found != next_row) {
      std::swap(m.row(found), m.row(next_row));
      if (rhs) {
        const bool a = (*rhs)[found];
        const bool b = (*rhs)[next_row];
        rhs->set(found, b);
        rhs->set(next_row, a);
      }
    }
    const BitVector& pivot_row = m.row(next_row);
    const bool pivot_rhs = rhs ? (*rhs)[next_row] : false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != next_row && m.row(r)[c]) {
        m.row(r) ^= pivot_row;
        if (rhs && pivot_rhs) rhs->flip(r);
      }
    }
    pivots.push_back(c);
    ++next_row;
  }
  return pivots;
}

}  // namespace

RowEchelon row_reduce(Gf2Matrix m) {
  auto pivots = eliminate(m, nullptr);
  return RowEchelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Gf2Matrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<BitVector> kernel_basis(const Gf2Matrix& m) {
  const RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f);
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      if (ech.reduced.row(r)[f]) v.set(ech.pivot_cols[r]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<BitVector> solve_lex_least(const Gf2Matrix& m, const BitVector& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("GF(2) right-hand side size mismatch");
  Gf2Matrix work = m;
  BitVector b = rhs;
  const auto pivots = eliminate(work, &b);
  for (std::size_t r = pivots.size(); r < work.rows(); ++r) {
    if (b[r]) return std::nullopt;
  }
  BitVector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (b[r]) x.set(pivots[r]);
  }

  // Reduce the particular solution against an echelon basis of the kernel: the
  // result is zero at every kernel pivot, which makes it lexicographically least.
  const auto basis = kernel_basis(m);
  if (basis.empty()) return x;
  Gf2Matrix k(basis.size(), m.cols());
  for (std::size_t i = 0; i < basis.size(); ++i) k.row(i) = basis[i];
  const RowEchelon kech = row_reduce(std::move(k));
  for (std::size_t r = 0; r < kech.pivot_cols.size(); ++r) {
    if (x[kech.pivot_cols[r]]) x ^= kech.reduced.row(r);
  }
  return x;
}

}  // namespace ergolab
