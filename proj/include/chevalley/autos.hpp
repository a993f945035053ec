#pragma once

#include <utility>
#include <vector>

#include "chevalley/braid.hpp"
#include "chevalley/lie.hpp"
#include "chevalley/matrix.hpp"
#include "chevalley/report.hpp"
#include "chevalley/tits.hpp"

namespace chevalley {

/// Linear operator on sl(n+1), as a d x d matrix over the canonical basis.
class AlgebraAutomorphism {
public:
  AlgebraAutomorphism(int n, Matrix op);

  static AlgebraAutomorphism identity(int n);

  int rank() const { return n_; }
  const Matrix& matrix() const { return op_; }

  LieElement operator()(const LieElement& x) const;

  AlgebraAutomorphism inverse() const;
  friend AlgebraAutomorphism operator*(const AlgebraAutomorphism& a, const AlgebraAutomorphism& b);

  bool operator==(const AlgebraAutomorphism&) const = default;

private:
  int n_;
  Matrix op_;
};

/// tau_i = exp(ad e_i) exp(ad(-f_i)) exp(ad e_i).
AlgebraAutomorphism tau_generator(int n, int i);

/// x -> g x g^-1 in the canonical basis.
AlgebraAutomorphism conjugation_automorphism(const GroupElement& g, int n);

/// True when op([x, y]) = [op(x), op(y)] for every pair of basis elements.
bool preserves_bracket(const AlgebraAutomorphism& op);

/// Image of the root vector E_{k,l}: the unique nonzero entry of its column,
/// as (destination index, coefficient). Throws std::logic_error when the
/// column is not a single nonzero entry in an off-diagonal slot.
std::pair<LieBasisIndex, Rational> root_space_image(const AlgebraAutomorphism& op, int k, int l);

/// tau_1..tau_n of one rank, built once. Inverses are tau_i^3; construction
/// fails with std::logic_error unless that agrees with exact inversion.
class StandardAutomorphisms {
public:
  explicit StandardAutomorphisms(int n);

  int rank() const { return n_; }
  const AlgebraAutomorphism& tau(int i) const { return taus_.at(static_cast<std::size_t>(i - 1)); }
  const AlgebraAutomorphism& tau_inverse(int i) const {
    return inverses_.at(static_cast<std::size_t>(i - 1));
  }

  /// Product of tau_i^{+-1} over the letters of w.
  AlgebraAutomorphism evaluate(const BraidWord& w) const;

private:
  int n_;
  std::vector<AlgebraAutomorphism> taus_;
  std::vector<AlgebraAutomorphism> inverses_;
};

/// Every relation instance of rank n checked on the standard automorphisms.
/// Results carry adjoint tags, ordered by (family, i, j).
Report verify_theorem1(int n, Execution exec = Execution::Parallel);
Report verify_theorem1(const StandardAutomorphisms& taus, Execution exec = Execution::Parallel);

/// For each relation instance: the group-level verdict under the section and
/// the adjoint-level verdict agree. Returns the instances (group tags) where
/// they differ.
std::vector<RelationResult> cross_check_levels(const Report& group, const Report& adjoint);

} // namespace chevalley
