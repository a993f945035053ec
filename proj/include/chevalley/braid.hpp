#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chevalley/roots.hpp"

namespace chevalley {

/// S_index^exponent with exponent +1 or -1.
struct BraidLetter {
  int index;
  int exponent;
  bool operator==(const BraidLetter&) const = default;
};

/// Word over the Artin generators S_1..S_n of the braid group on n+1 strands.
/// Words are never rewritten with braid relations; only free reduction exists.
class BraidWord {
public:
  explicit BraidWord(int n, std::vector<BraidLetter> letters = {});

  /// Whitespace-separated signed generator indices: "1 2 -1" is S_1 S_2 S_1^-1.
  static BraidWord parse(int n, std::string_view text);

  /// S_i^e, spelled out letter by letter (empty for e = 0).
  static BraidWord power(int n, int i, int e);

  int rank() const { return n_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  /// Cancels adjacent S_i S_i^-1 pairs until none remain.
  BraidWord free_reduced() const;

  /// Concatenation without reduction.
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);

  bool operator==(const BraidWord&) const = default;

  std::string to_string() const;

private:
  int n_;
  std::vector<BraidLetter> letters_;
};

/// Concatenation followed by free reduction.
BraidWord concat_reduce(const BraidWord& a, const BraidWord& b);

/// pi(S_i^{+-1}) = s_i, extended multiplicatively: pi(ab) = pi(a) o pi(b).
Permutation natural_projection(const BraidWord& w);

bool is_pure(const BraidWord& w);

/// Coxeter exponents of type A_n: m_ii = 1, m_ij = 3 for |i-j| = 1, else 2.
class CoxeterMatrix {
public:
  explicit CoxeterMatrix(int n);
  int rank() const { return n_; }
  int operator()(int i, int j) const;

private:
  int n_;
};

enum class RelationFamily {
  Braid,             ///< S_i S_j ... = S_j S_i ... (m_ij letters each side)
  SquareCommute,     ///< S_i^2 S_j^2 = S_j^2 S_i^2
  FourthPower,       ///< S_i^4 = 1
  SquareConjugation, ///< S_i S_j^2 S_i^-1 = S_j^2 S_i^(-2<alpha_j, h_i>)
};

/// Wire tags used in group-level reports: "2.9", "2.10", "2.11", "2.12".
std::string group_tag(RelationFamily f);
/// Wire tags used in adjoint-level reports: "0.2", "0.4", "0.5", "0.6".
std::string adjoint_tag(RelationFamily f);
/// Inverse of both tag maps. Throws ParseError.
RelationFamily family_from_tag(std::string_view tag);

struct RelationInstance {
  RelationFamily family;
  int i;
  int j; ///< equal to i for FourthPower
  BraidWord left;
  BraidWord right;
};

/// All relation instances for rank n: the three two-index families for every
/// ordered pair i != j, and S_i^4 = 1 once per i. Ordered by (family, i, j).
std::vector<RelationInstance> relation_instances(int n);

} // namespace chevalley
