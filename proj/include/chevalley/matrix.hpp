#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "chevalley/errors.hpp"
#include "chevalley/rational.hpp"

namespace chevalley {

/// Dense square matrix over an exact field, row-major, 0-based access.
template <ExactField F>
class SquareMatrix {
public:
  using value_type = F;

  SquareMatrix() = default;

  explicit SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, F(0)) {
    if (dim == 0)
      throw DimensionMismatch("matrix dimension must be positive");
  }

  SquareMatrix(std::initializer_list<std::initializer_list<F>> rows)
      : SquareMatrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_)
        throw DimensionMismatch("ragged matrix literal");
      std::copy(row.begin(), row.end(), entries_.begin() + r * dim_);
      ++r;
    }
  }

  static SquareMatrix zero(std::size_t dim) { return SquareMatrix(dim); }

  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      m(i, i) = F(1);
    return m;
  }

  /// Matrix unit E_{row,col}, 0-based.
  static SquareMatrix unit(std::size_t dim, std::size_t row, std::size_t col) {
    SquareMatrix m(dim);
    m(row, col) = F(1);
    return m;
  }

  static SquareMatrix diagonal(const std::vector<F>& diag) {
    SquareMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
      m(i, i) = diag[i];
    return m;
  }

  std::size_t dim() const { return dim_; }

  const F& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  F& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

  const std::vector<F>& entries() const { return entries_; }

  bool operator==(const SquareMatrix&) const = default;

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const F& x) { return x == F(0); });
  }

  bool is_identity() const { return *this == identity(dim_); }

  bool is_diagonal() const {
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        if (r != c && !((*this)(r, c) == F(0)))
          return false;
    return true;
  }

  F trace() const {
    F t(0);
    for (std::size_t i = 0; i < dim_; ++i)
      t += (*this)(i, i);
    return t;
  }

  SquareMatrix transpose() const {
    SquareMatrix t(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      entries_[k] += o.entries_[k];
    return *this;
  }

  SquareMatrix& operator-=(const SquareMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < entries_.size(); ++k)
      entries_[k] -= o.entries_[k];
    return *this;
  }

  SquareMatrix& operator*=(const F& s) {
    for (auto& x : entries_)
      x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, const F& s) { return a *= s; }
  friend SquareMatrix operator*(const F& s, SquareMatrix a) { return a *= s; }
  friend SquareMatrix operator-(SquareMatrix a) { return a *= F(-1); }

  void require_same_dim(const SquareMatrix& o) const {
    if (dim_ != o.dim_)
      throw DimensionMismatch("matrix dimensions differ");
  }

private:
  std::size_t dim_ = 0;
  std::vector<F> entries_;
};

using Matrix = SquareMatrix<Rational>;

} // namespace chevalley
