#pragma once

#include <optional>
#include <vector>

#include "chevalley/braid.hpp"
#include "chevalley/lie.hpp"
#include "chevalley/matrix.hpp"
#include "chevalley/report.hpp"
#include "chevalley/roots.hpp"

// Group-level objects in SL(n+1) over the rationals: the diagonal torus T,
// its rank-one pieces T_i, the monomial normalizer N(T), and Tits sections
// lifting the simple reflections into N(T).

namespace chevalley {

/// Matrix of determinant exactly one.
class GroupElement {
public:
  /// Throws NotInSpecialLinear unless det(m) = 1.
  explicit GroupElement(Matrix m);

  static GroupElement identity(std::size_t dim) { return GroupElement(Matrix::identity(dim)); }

  const Matrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }
  int rank() const { return static_cast<int>(m_.dim()) - 1; }

  GroupElement inverse() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

  bool operator==(const GroupElement&) const = default;

private:
  struct Trusted {};
  GroupElement(Matrix m, Trusted) : m_(std::move(m)) {}
  Matrix m_;
};

/// Parameters a_1..a_n (all nonzero) choosing sigma_i in N_i \ T_i with
/// block ((0, a_i), (-1/a_i, 0)) at rows/columns i, i+1.
class TitsSection {
public:
  TitsSection(int n, std::vector<Rational> params);

  /// All parameters 1: the section obtained from exp(e_i) exp(-f_i) exp(e_i).
  static TitsSection ones(int n);

  int rank() const { return n_; }
  const std::vector<Rational>& params() const { return a_; }
  const Rational& param(int i) const { return a_[static_cast<std::size_t>(i - 1)]; }

  bool operator==(const TitsSection&) const = default;

private:
  int n_;
  std::vector<Rational> a_;
};

/// X = sum_i x_i E_{sigma(i), i}: column i carries its only nonzero entry
/// x_i in row sigma(i).
struct MonomialDecomposition {
  Permutation sigma;
  std::vector<Rational> scales;

  Matrix reconstruct() const;
  bool operator==(const MonomialDecomposition&) const = default;
};

GroupElement sigma_generator(const TitsSection& s, int i);
GroupElement sigma_generator_inverse(const TitsSection& s, int i);

/// exp(e_i) exp(-f_i) exp(e_i), built from terminating exponentials.
GroupElement exp_construction(int n, int i);

/// Product of sigma_i^{+-1} over the letters of w.
GroupElement evaluate_word(const TitsSection& s, const BraidWord& w);

/// Exactly one nonzero entry in every row and column.
bool is_monomial(const Matrix& m);

/// Throws NotInNormalizer for non-monomial input.
MonomialDecomposition normalizer_decompose(const GroupElement& x);

/// E_sigma = sgn(sigma) E_{sigma(1),1} + sum_{i >= 2} E_{sigma(i),i}; det 1.
GroupElement coset_representative(const Permutation& sigma);

/// The class of x in N(T)/T, as a permutation. Throws NotInNormalizer.
Permutation coset_class(const GroupElement& x);

/// diag with p at slot i and 1/p at slot i+1: an element of T_i.
GroupElement torus_element(int n, int i, const Rational& p);

/// Factors Y_1..Y_n with Y_i in T_i and Y_1 ... Y_n = x, for diagonal x of
/// determinant one. Y_i carries the running product x_1 ... x_i. Throws
/// NotDiagonal.
std::vector<GroupElement> torus_generation_witness(const GroupElement& x);

/// t_i in T_i with sigma'_i t_i = sigma_i, where sigma uses s and sigma'
/// uses s_prime.
GroupElement section_correction(const TitsSection& s, const TitsSection& s_prime, int i);

/// Fundamental coweight: diagonal with entries (n+1-j)/(n+1) in slots
/// k <= j and -j/(n+1) in slots k > j, so that alpha_i(coweight_j) = delta_ij.
LieElement coweight(int n, int j);

/// Exact k-th root of x in the rationals, if one exists (the positive one
/// when k is even).
std::optional<Rational> rational_root(const Rational& x, unsigned k);

/// Diagonal t in T with t sigma'_i t^-1 = sigma_i for every i, where sigma
/// uses s and sigma' uses s_prime. Solves t_i / t_{i+1} = a_i / b_i with
/// prod t_i = 1; nullopt when that forces an (n+1)-st root that is not
/// rational.
std::optional<GroupElement> conjugation_witness(const TitsSection& s, const TitsSection& s_prime);

/// Checks every relation instance of the rank under evaluate_word. Results
/// carry group tags and are ordered by (family, i, j).
Report verify_group_relations(const TitsSection& s, Execution exec = Execution::Parallel);

} // namespace chevalley
