#include "ergolab/cohomo2d.hpp"

#include <stdexcept>

namespace ergolab {

namespace {

void check_length(const Action2D& action, const BitVector& v, const char* what) {
  if (v.size() != action.size()) {
    throw std::invalid_argument(std::string(what) + " length does not match the action");
  }
}

// (v o sigma)(x) = v(sigma x)
BitVector compose(const BitVector& v, const FinitePermutation& sigma) {
  BitVector out(v.size());
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (v[sigma(x)]) out.set(x);
  }
  return out;
}

}  // namespace

Action2D::Action2D(FinitePermutation s, FinitePermutation t) : s_(std::move(s)), t_(std::move(t)) {
  if (s_.size() != t_.size()) throw std::invalid_argument("S and T act on different point counts");
  for (std::size_t x = 0; x < s_.size(); ++x) {
    if (s_(t_(x)) != t_(s_(x))) throw std::invalid_argument("S and T do not commute");
  }
}

Action2D Action2D::torus_grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid dimensions must be positive");
  std::vector<std::size_t> s(rows * cols);
  std::vector<std::size_t> t(rows * cols);
  for (std::size_t x = 0; x < rows; ++x) {
    for (std::size_t y = 0; y < cols; ++y) {
      s[x * cols + y] = ((x + 1) % rows) * cols + y;
      t[x * cols + y] = x * cols + (y + 1) % cols;
    }
  }
  Action2D a(FinitePermutation(std::move(s)), FinitePermutation(std::move(t)));
  a.shape_ = std::make_pair(rows, cols);
  return a;
}

Cochain1 d0(const Action2D& action, const Cochain0& c) {
  check_length(action, c.c, "0-cochain");
  return Cochain1{compose(c.c, action.s()) ^ c.c, compose(c.c, action.t()) ^ c.c};
}

Cochain2 d1(const Action2D& action, const Cochain1& pq) {
  check_length(action, pq.p, "P");
  check_length(action, pq.q, "Q");
  BitVector f = pq.p ^ pq.q;
  f ^= compose(pq.q, action.s());
  f ^= compose(pq.p, action.t());
  return Cochain2{std::move(f)};
}

Gf2Matrix d0_matrix(const Action2D& action) {
  const std::size_t n = action.size();
  Gf2Matrix m(2 * n, n);
  for (std::size_t x = 0; x < n; ++x) {
    m.flip(x, x);
    m.flip(x, action.s()(x));
    m.flip(n + x, x);
    m.flip(n + x, action.t()(x));
  }
  return m;
}

Gf2Matrix d1_matrix(const Action2D& action) {
  const std::size_t n = action.size();
  Gf2Matrix m(n, 2 * n);
  for (std::size_t x = 0; x < n; ++x) {
    m.flip(x, x);                        // P(x)
    m.flip(x, action.t()(x));            // P(Tx)
    m.flip(x, n + x);                    // Q(x)
    m.flip(x, n + action.s()(x));        // Q(Sx)
  }
  return m;
}

std::optional<Cochain1> solve_curl(const Action2D& action, const Cochain2& f) {
  check_length(action, f.f, "2-cochain");
  const auto x = solve_lex_least(d1_matrix(action), f.f);
  if (!x) return std::nullopt;
  const std::size_t n = action.size();
  Cochain1 pq{BitVector(n), BitVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    if ((*x)[i]) pq.p.set(i);
    if ((*x)[n + i]) pq.q.set(i);
  }
  return pq;
}

CohomologyDims cohomology_dims(const Action2D& action) {
  const std::size_t n = action.size();
  const std::size_t r0 = rank(d0_matrix(action));
  const std::size_t r1 = rank(d1_matrix(action));
  return CohomologyDims{n - r0, 2 * n - r1 - r0, n - r1};
}

}  // namespace ergolab
