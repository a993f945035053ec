#include "chevalley/tits.hpp"

#include <algorithm>

#include "chevalley/errors.hpp"
#include "chevalley/linalg.hpp"

namespace chevalley {

GroupElement::GroupElement(Matrix m) : m_(std::move(m)) {
  if (det(m_) != 1)
    throw NotInSpecialLinear("determinant is " + to_string(det(m_)) + ", expected 1");
}

GroupElement GroupElement::inverse() const { return GroupElement(invert(m_), Trusted{}); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return GroupElement(a.m_ * b.m_, GroupElement::Trusted{});
}

TitsSection::TitsSection(int n, std::vector<Rational> params) : n_(n), a_(std::move(params)) {
  require_rank(n);
  if (a_.size() != static_cast<std::size_t>(n))
    throw DimensionMismatch("Tits section needs " + std::to_string(n) + " parameters, got " +
                            std::to_string(a_.size()));
  for (const auto& a : a_)
    if (is_zero(a))
      throw std::invalid_argument("Tits section parameters must be nonzero");
}

TitsSection TitsSection::ones(int n) {
  require_rank(n);
  return TitsSection(n, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

Matrix MonomialDecomposition::reconstruct() const {
  const auto dim = static_cast<std::size_t>(sigma.points());
  Matrix m(dim);
  for (int i = 1; i <= sigma.points(); ++i)
    m(static_cast<std::size_t>(sigma(i) - 1), static_cast<std::size_t>(i - 1)) =
        scales[static_cast<std::size_t>(i - 1)];
  return m;
}

namespace {

void require_generator(int n, int i) {
  if (i < 1 || i > n)
    throw IndexOutOfRange("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

Matrix block_matrix(int n, int i, const Rational& upper, const Rational& lower) {
  auto m = Matrix::identity(static_cast<std::size_t>(n + 1));
  const auto r = static_cast<std::size_t>(i - 1);
  m(r, r) = 0;
  m(r + 1, r + 1) = 0;
  m(r, r + 1) = upper;
  m(r + 1, r) = lower;
  return m;
}

} // namespace

GroupElement sigma_generator(const TitsSection& s, int i) {
  require_generator(s.rank(), i);
  const Rational& a = s.param(i);
  return GroupElement(block_matrix(s.rank(), i, a, Rational(-1 / a)));
}

GroupElement sigma_generator_inverse(const TitsSection& s, int i) {
  require_generator(s.rank(), i);
  const Rational& a = s.param(i);
  return GroupElement(block_matrix(s.rank(), i, Rational(-a), Rational(1 / a)));
}

GroupElement exp_construction(int n, int i) {
  require_generator(n, i);
  const Matrix e = generator(n, Chevalley::E, i).to_matrix();
  const Matrix f = generator(n, Chevalley::F, i).to_matrix();
  const Matrix ee = exp_nilpotent(e);
  return GroupElement(ee * exp_nilpotent(Matrix(-f)) * ee);
}

GroupElement evaluate_word(const TitsSection& s, const BraidWord& w) {
  if (w.rank() != s.rank())
    throw DimensionMismatch("word rank " + std::to_string(w.rank()) + " does not match section rank " +
                            std::to_string(s.rank()));
  auto result = GroupElement::identity(static_cast<std::size_t>(s.rank() + 1));
  for (const auto& l : w.letters())
    result = result * (l.exponent > 0 ? sigma_generator(s, l.index) : sigma_generator_inverse(s, l.index));
  return result;
}

bool is_monomial(const Matrix& m) {
  const std::size_t n = m.dim();
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t in_row = 0, in_col = 0;
    for (std::size_t c = 0; c < n; ++c) {
      in_row += !is_zero(m(r, c));
      in_col += !is_zero(m(c, r));
    }
    if (in_row != 1 || in_col != 1)
      return false;
  }
  return true;
}

MonomialDecomposition normalizer_decompose(const GroupElement& x) {
  const Matrix& m = x.matrix();
  if (!is_monomial(m))
    throw NotInNormalizer("matrix is not monomial");
  const std::size_t n = m.dim();
  std::vector<int> images(n);
  std::vector<Rational> scales(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (!is_zero(m(r, c))) {
        images[c] = static_cast<int>(r) + 1;
        scales[c] = m(r, c);
      }
  return {Permutation(std::move(images)), std::move(scales)};
}

GroupElement coset_representative(const Permutation& sigma) {
  std::vector<Rational> scales(static_cast<std::size_t>(sigma.points()), Rational(1));
  scales[0] = sigma.sign();
  return GroupElement(MonomialDecomposition{sigma, std::move(scales)}.reconstruct());
}

Permutation coset_class(const GroupElement& x) { return normalizer_decompose(x).sigma; }

GroupElement torus_element(int n, int i, const Rational& p) {
  require_rank(n);
  require_generator(n, i);
  if (is_zero(p))
    throw std::invalid_argument("torus parameter must be nonzero");
  auto m = Matrix::identity(static_cast<std::size_t>(n + 1));
  m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = p;
  m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1 / p;
  return GroupElement(std::move(m));
}

std::vector<GroupElement> torus_generation_witness(const GroupElement& x) {
  if (!x.matrix().is_diagonal())
    throw NotDiagonal("torus element must be diagonal");
  const int n = x.rank();
  require_rank(n);
  std::vector<GroupElement> factors;
  Rational running(1);
  for (int i = 1; i <= n; ++i) {
    running *= x.matrix()(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1));
    factors.push_back(torus_element(n, i, running));
  }
  return factors;
}

GroupElement section_correction(const TitsSection& s, const TitsSection& s_prime, int i) {
  if (s.rank() != s_prime.rank())
    throw DimensionMismatch("sections of different rank");
  return torus_element(s.rank(), i, s_prime.param(i) / s.param(i));
}

LieElement coweight(int n, int j) {
  require_rank(n);
  require_generator(n, j);
  const Rational m(n + 1);
  const Rational upper = Rational(n + 1 - j) / m;
  const Rational lower = Rational(-j) / m;
  Matrix d(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n + 1; ++k)
    d(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k - 1)) = k <= j ? upper : lower;
  return LieElement::from_matrix(d);
}

std::optional<Rational> rational_root(const Rational& x, unsigned k) {
  if (k == 0)
    throw std::invalid_argument("root degree must be positive");
  if (sgn(x) < 0 && k % 2 == 0)
    return std::nullopt;
  mpz_class num = abs(x.get_num());
  mpz_class den = x.get_den();
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0)
    return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0)
    return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  if (sgn(x) < 0)
    r = -r;
  return r;
}

std::optional<GroupElement> conjugation_witness(const TitsSection& s, const TitsSection& s_prime) {
  if (s.rank() != s_prime.rank())
    throw DimensionMismatch("sections of different rank");
  const int n = s.rank();
  // t_k = u * q_k with q_1 = 1 and q_{k+1} = q_k * b_k / a_k
  std::vector<Rational> q{Rational(1)};
  for (int k = 1; k <= n; ++k)
    q.push_back(q.back() * s_prime.param(k) / s.param(k));
  Rational prod(1);
  for (const auto& v : q)
    prod *= v;
  const auto u = rational_root(Rational(1 / prod), static_cast<unsigned>(n + 1));
  if (!u)
    return std::nullopt;
  for (auto& v : q)
    v *= *u;
  return GroupElement(Matrix::diagonal(q));
}

Report verify_group_relations(const TitsSection& s, Execution exec) {
  const auto instances = relation_instances(s.rank());
  Report report{s.rank(), std::vector<RelationResult>(instances.size())};
  const long count = static_cast<long>(instances.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
  for (long k = 0; k < count; ++k) {
    const auto& inst = instances[static_cast<std::size_t>(k)];
    const auto left = evaluate_word(s, inst.left);
    const auto right = evaluate_word(s, inst.right);
    auto& r = report.relations[static_cast<std::size_t>(k)];
    r.tag = group_tag(inst.family);
    r.i = inst.i;
    r.j = inst.j;
    r.pass = left == right;
    if (!r.pass) {
      r.left = left.matrix();
      r.right = right.matrix();
    }
  }
  return report;
}

} // namespace chevalley
