#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "chevalley/matrix.hpp"
#include "chevalley/rational.hpp"

// The Lie algebra sl(n+1) over the rationals, in a fixed ordered basis:
// every off-diagonal unit E_{i,j} (i != j) in lexicographic (i, j) order,
// followed by the simple coroots h_1, ..., h_n with h_k = E_{k,k} - E_{k+1,k+1}.
// All indices in this interface are 1-based.

namespace chevalley {

struct LieBasisIndex {
  enum class Kind { OffDiagonal, Cartan };

  Kind kind = Kind::OffDiagonal;
  int i = 0;
  int j = 0; ///< unused (0) for Cartan entries

  static LieBasisIndex off_diagonal(int i, int j) { return {Kind::OffDiagonal, i, j}; }
  static LieBasisIndex cartan(int k) { return {Kind::Cartan, k, 0}; }

  bool is_cartan() const { return kind == Kind::Cartan; }
  bool operator==(const LieBasisIndex&) const = default;

  /// "E1,2" or "h3".
  std::string label() const;
};

void require_rank(int n);

/// d = (n+1)^2 - 1.
std::size_t lie_dimension(int n);

std::vector<LieBasisIndex> lie_basis(int n);

/// Position of a basis index in the canonical order. Throws IndexOutOfRange.
std::size_t basis_slot(int n, const LieBasisIndex& idx);

LieBasisIndex basis_at(int n, std::size_t slot);

class LieElement {
public:
  /// The zero element of sl(n+1).
  explicit LieElement(int n);
  LieElement(int n, std::vector<Rational> coords);

  /// Coordinates of a trace-zero matrix. Throws DimensionMismatch when the
  /// trace is nonzero.
  static LieElement from_matrix(const Matrix& m);

  static LieElement basis_element(int n, const LieBasisIndex& idx);

  int rank() const { return n_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& coord(const LieBasisIndex& idx) const { return coords_[basis_slot(n_, idx)]; }

  Matrix to_matrix() const;

  /// True when every off-diagonal coordinate vanishes.
  bool is_cartan() const;

  bool operator==(const LieElement&) const = default;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& s);

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
  friend LieElement operator-(LieElement a) { return a *= Rational(-1); }

private:
  int n_;
  std::vector<Rational> coords_;
};

enum class Chevalley { E, F, H };

/// e_i = E_{i,i+1}, f_i = E_{i+1,i}, h_i = E_{i,i} - E_{i+1,i+1}.
LieElement generator(int n, Chevalley which, int i);

/// [x, y] = xy - yx.
LieElement bracket(const LieElement& x, const LieElement& y);

/// Matrix of ad_x = [x, -] on the canonical basis; column b holds the
/// coordinates of [x, basis_b].
Matrix ad_matrix(const LieElement& x);

/// Diagonal entries of the matrix realization of a Cartan element.
std::vector<Rational> cartan_diagonal(const LieElement& h);

/// Partition of the basis by ad(h)-eigenvalue for a Cartan element h.
/// ad(h) is diagonal in the canonical basis; eigenvalues are read off its
/// diagonal. Throws NotDiagonal for non-Cartan input.
std::map<Rational, std::vector<LieBasisIndex>> decompose_by_cartan(int n, const LieElement& h);

} // namespace chevalley
