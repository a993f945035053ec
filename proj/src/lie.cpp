#include "chevalley/lie.hpp"

#include <algorithm>

#include "chevalley/errors.hpp"
#include "chevalley/linalg.hpp"

namespace chevalley {

std::string LieBasisIndex::label() const {
  if (is_cartan())
    return "h" + std::to_string(i);
  return "E" + std::to_string(i) + "," + std::to_string(j);
}

void require_rank(int n) {
  if (n < 1)
    throw InvalidRank("rank must be at least 1, got " + std::to_string(n));
}

std::size_t lie_dimension(int n) {
  require_rank(n);
  const auto m = static_cast<std::size_t>(n + 1);
  return m * m - 1;
}

std::vector<LieBasisIndex> lie_basis(int n) {
  require_rank(n);
  std::vector<LieBasisIndex> basis;
  basis.reserve(lie_dimension(n));
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j)
      if (i != j)
        basis.push_back(LieBasisIndex::off_diagonal(i, j));
  for (int k = 1; k <= n; ++k)
    basis.push_back(LieBasisIndex::cartan(k));
  return basis;
}

std::size_t basis_slot(int n, const LieBasisIndex& idx) {
  require_rank(n);
  const int m = n + 1;
  if (idx.is_cartan()) {
    if (idx.i < 1 || idx.i > n)
      throw IndexOutOfRange("Cartan index out of range: " + idx.label());
    return static_cast<std::size_t>(m * n + idx.i - 1);
  }
  if (idx.i < 1 || idx.i > m || idx.j < 1 || idx.j > m || idx.i == idx.j)
    throw IndexOutOfRange("off-diagonal index out of range: " + idx.label());
  // row i contributes n slots (its diagonal is skipped)
  return static_cast<std::size_t>((idx.i - 1) * n + (idx.j < idx.i ? idx.j - 1 : idx.j - 2));
}

LieBasisIndex basis_at(int n, std::size_t slot) {
  require_rank(n);
  const auto off = static_cast<std::size_t>((n + 1) * n);
  if (slot >= lie_dimension(n))
    throw IndexOutOfRange("basis slot out of range: " + std::to_string(slot));
  if (slot >= off)
    return LieBasisIndex::cartan(static_cast<int>(slot - off) + 1);
  const int i = static_cast<int>(slot / static_cast<std::size_t>(n)) + 1;
  int j = static_cast<int>(slot % static_cast<std::size_t>(n)) + 1;
  if (j >= i)
    ++j;
  return LieBasisIndex::off_diagonal(i, j);
}

LieElement::LieElement(int n) : n_(n), coords_(lie_dimension(n), Rational(0)) {}

LieElement::LieElement(int n, std::vector<Rational> coords) : n_(n), coords_(std::move(coords)) {
  if (coords_.size() != lie_dimension(n))
    throw DimensionMismatch("coordinate vector has length " + std::to_string(coords_.size()) +
                            ", expected " + std::to_string(lie_dimension(n)));
}

LieElement LieElement::from_matrix(const Matrix& m) {
  if (m.dim() < 2)
    throw DimensionMismatch("sl(n+1) needs matrices of size at least 2");
  if (!is_zero(m.trace()))
    throw DimensionMismatch("matrix has nonzero trace");
  const int n = static_cast<int>(m.dim()) - 1;
  LieElement x(n);
  std::size_t s = 0;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j)
      if (i != j)
        x.coords_[s++] = m(i - 1, j - 1);
  // diag(D) = sum c_k h_k  <=>  c_k = D_1 + ... + D_k
  Rational running(0);
  for (int k = 1; k <= n; ++k) {
    running += m(k - 1, k - 1);
    x.coords_[s++] = running;
  }
  return x;
}

LieElement LieElement::basis_element(int n, const LieBasisIndex& idx) {
  LieElement x(n);
  x.coords_[basis_slot(n, idx)] = 1;
  return x;
}

Matrix LieElement::to_matrix() const {
  const auto m = static_cast<std::size_t>(n_ + 1);
  Matrix out(m);
  std::size_t s = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j)
        out(i, j) = coords_[s++];
  for (std::size_t k = 0; k < static_cast<std::size_t>(n_); ++k, ++s) {
    out(k, k) += coords_[s];
    out(k + 1, k + 1) -= coords_[s];
  }
  return out;
}

bool LieElement::is_cartan() const {
  const auto off = static_cast<std::size_t>((n_ + 1) * n_);
  return std::all_of(coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(off),
                     [](const Rational& q) { return is_zero(q); });
}

LieElement& LieElement::operator+=(const LieElement& o) {
  if (o.n_ != n_)
    throw DimensionMismatch("rank mismatch");
  for (std::size_t k = 0; k < coords_.size(); ++k)
    coords_[k] += o.coords_[k];
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  if (o.n_ != n_)
    throw DimensionMismatch("rank mismatch");
  for (std::size_t k = 0; k < coords_.size(); ++k)
    coords_[k] -= o.coords_[k];
  return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
  for (auto& c : coords_)
    c *= s;
  return *this;
}

LieElement generator(int n, Chevalley which, int i) {
  require_rank(n);
  if (i < 1 || i > n)
    throw IndexOutOfRange("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  switch (which) {
  case Chevalley::E:
    return LieElement::basis_element(n, LieBasisIndex::off_diagonal(i, i + 1));
  case Chevalley::F:
    return LieElement::basis_element(n, LieBasisIndex::off_diagonal(i + 1, i));
  case Chevalley::H:
    break;
  }
  return LieElement::basis_element(n, LieBasisIndex::cartan(i));
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (x.rank() != y.rank())
    throw DimensionMismatch("rank mismatch in bracket");
  const Matrix a = x.to_matrix();
  const Matrix b = y.to_matrix();
  return LieElement::from_matrix(a * b - b * a);
}

Matrix ad_matrix(const LieElement& x) {
  const int n = x.rank();
  const std::size_t d = lie_dimension(n);
  const Matrix xm = x.to_matrix();
  Matrix ad(d);
  for (std::size_t col = 0; col < d; ++col) {
    const Matrix b = LieElement::basis_element(n, basis_at(n, col)).to_matrix();
    const auto image = LieElement::from_matrix(xm * b - b * xm);
    for (std::size_t row = 0; row < d; ++row)
      ad(row, col) = image.coords()[row];
  }
  return ad;
}

std::vector<Rational> cartan_diagonal(const LieElement& h) {
  if (!h.is_cartan())
    throw NotDiagonal("element is not in the diagonal Cartan subalgebra");
  const Matrix m = h.to_matrix();
  std::vector<Rational> diag;
  for (std::size_t k = 0; k < m.dim(); ++k)
    diag.push_back(m(k, k));
  return diag;
}

std::map<Rational, std::vector<LieBasisIndex>> decompose_by_cartan(int n, const LieElement& h) {
  if (h.rank() != n)
    throw DimensionMismatch("rank mismatch in decompose_by_cartan");
  if (!h.is_cartan())
    throw NotDiagonal("element is not in the diagonal Cartan subalgebra");
  const Matrix ad = ad_matrix(h);
  if (!ad.is_diagonal())
    throw std::logic_error("ad of a Cartan element must be diagonal in the canonical basis");
  std::map<Rational, std::vector<LieBasisIndex>> buckets;
  for (std::size_t s = 0; s < ad.dim(); ++s)
    buckets[ad(s, s)].push_back(basis_at(n, s));
  return buckets;
}

} // namespace chevalley
