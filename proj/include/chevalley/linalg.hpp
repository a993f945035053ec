#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chevalley/errors.hpp"
#include "chevalley/matrix.hpp"

namespace chevalley {

/// Below this dimension the product kernel stays on the calling thread.
inline constexpr std::size_t kParallelMulThreshold = 24;

namespace reference {

/// Textbook triple loop. Kept as the oracle for the parallel kernel.
template <ExactField F>
SquareMatrix<F> mat_mul(const SquareMatrix<F>& a, const SquareMatrix<F>& b) {
  a.require_same_dim(b);
  const std::size_t n = a.dim();
  SquareMatrix<F> c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      F sum(0);
      for (std::size_t k = 0; k < n; ++k)
        sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  return c;
}

} // namespace reference

/// Exact product. Rows are distributed across OpenMP threads and zero
/// entries of `a` are skipped; the operators handled here are very sparse.
template <ExactField F>
SquareMatrix<F> mat_mul(const SquareMatrix<F>& a, const SquareMatrix<F>& b) {
  a.require_same_dim(b);
  const std::size_t n = a.dim();
  SquareMatrix<F> c(n);
  const F zero(0);
  const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (n >= kParallelMulThreshold)
  for (long ri = 0; ri < rows; ++ri) {
    const auto i = static_cast<std::size_t>(ri);
    for (std::size_t k = 0; k < n; ++k) {
      const F& aik = a(i, k);
      if (aik == zero)
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        const F& bkj = b(k, j);
        if (!(bkj == zero))
          c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

template <ExactField F>
SquareMatrix<F> operator*(const SquareMatrix<F>& a, const SquareMatrix<F>& b) {
  return mat_mul(a, b);
}

/// a^k for k >= 0 by repeated squaring.
template <ExactField F>
SquareMatrix<F> power(SquareMatrix<F> a, unsigned k) {
  auto result = SquareMatrix<F>::identity(a.dim());
  while (k > 0) {
    if (k & 1u)
      result = mat_mul(result, a);
    k >>= 1u;
    if (k > 0)
      a = mat_mul(a, a);
  }
  return result;
}

/// Exact determinant by Gaussian elimination; any nonzero pivot will do.
template <ExactField F>
F det(SquareMatrix<F> a) {
  const std::size_t n = a.dim();
  F result(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == F(0))
      ++pivot;
    if (pivot == n)
      return F(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(a(pivot, c), a(col, c));
      result = -result;
    }
    const F p = a(col, col);
    result *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == F(0))
        continue;
      const F factor = a(r, col) / p;
      for (std::size_t c = col; c < n; ++c)
        a(r, c) -= factor * a(col, c);
    }
  }
  return result;
}

/// Exact inverse by Gauss-Jordan elimination. Throws SingularMatrix.
template <ExactField F>
SquareMatrix<F> invert(SquareMatrix<F> a) {
  const std::size_t n = a.dim();
  auto inv = SquareMatrix<F>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == F(0))
      ++pivot;
    if (pivot == n)
      throw SingularMatrix();
    if (pivot != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    const F p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == F(0))
        continue;
      const F factor = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

/// Index of nilpotency: the least k with x^k = 0. Throws NotNilpotent when
/// x^dim is nonzero (a nilpotent dim x dim matrix always has x^dim = 0).
template <ExactField F>
unsigned nilpotency_index(const SquareMatrix<F>& x) {
  auto p = SquareMatrix<F>::identity(x.dim());
  for (unsigned k = 1; k <= x.dim(); ++k) {
    p = mat_mul(p, x);
    if (p.is_zero())
      return k;
  }
  throw NotNilpotent();
}

/// exp(x) = sum_{m < k} x^m / m! for nilpotent x with x^k = 0. Never
/// approximates: non-nilpotent input is rejected.
template <ExactField F>
SquareMatrix<F> exp_nilpotent(const SquareMatrix<F>& x) {
  const std::size_t n = x.dim();
  auto result = SquareMatrix<F>::identity(n);
  auto term = SquareMatrix<F>::identity(n);
  for (unsigned m = 1; m <= n; ++m) {
    term = mat_mul(term, x);
    if (term.is_zero())
      return result;
    term *= F(1) / F(static_cast<long>(m));
    result += term;
  }
  throw NotNilpotent();
}

} // namespace chevalley
