#pragma once

#include <compare>
#include <string>
#include <vector>

// Type A_n root system in epsilon coordinates and its Weyl group S_{n+1}.
// Indices are 1-based throughout.

namespace chevalley {

/// Integer combination of eps_1..eps_{n+1} with coefficient sum zero.
class RootVector {
public:
  RootVector(int n, std::vector<int> eps);

  static RootVector zero(int n);
  /// eps_i - eps_j.
  static RootVector root(int n, int i, int j);
  /// alpha_i = eps_i - eps_{i+1}.
  static RootVector simple(int n, int i);

  int rank() const { return n_; }
  const std::vector<int>& eps() const { return eps_; }
  int operator[](int k) const { return eps_[static_cast<std::size_t>(k - 1)]; }

  /// Exactly one +1, one -1, zeros elsewhere.
  bool is_root() const;

  bool operator==(const RootVector&) const = default;
  auto operator<=>(const RootVector&) const = default;

  RootVector operator-() const;
  friend RootVector operator+(const RootVector& a, const RootVector& b);
  friend RootVector operator-(const RootVector& a, const RootVector& b) { return a + (-b); }
  friend RootVector operator*(int s, const RootVector& a);

  /// e.g. "e1-e3", "-e1+e2", "0".
  std::string to_string() const;

private:
  int n_;
  std::vector<int> eps_;
};

/// All n(n+1) roots eps_i - eps_j, i != j, ordered lexicographically by (i, j).
std::vector<RootVector> all_roots(int n);

/// <beta, h_i> = beta_i - beta_{i+1}.
int pairing(const RootVector& beta, int i);

/// <beta, h_alpha> for a root alpha = eps_a - eps_b: beta_a - beta_b.
int coroot_pairing(const RootVector& beta, const RootVector& alpha);

/// s_alpha(beta) = beta - <beta, h_alpha> alpha. Throws NotARoot.
RootVector reflect(const RootVector& alpha, const RootVector& beta);

class Permutation {
public:
  /// images[k-1] = sigma(k); must be a bijection of {1..m}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int points);
  static Permutation transposition(int points, int a, int b);
  /// s_i = (i i+1) on n+1 points.
  static Permutation simple(int n, int i);

  int points() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  int sign() const;
  Permutation inverse() const;

  /// (this o inner)(k) = this(inner(k)).
  Permutation compose(const Permutation& inner) const;
  friend Permutation operator*(const Permutation& outer, const Permutation& inner) {
    return outer.compose(inner);
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  /// One-line notation, e.g. "[2 1 3]".
  std::string one_line() const;
  /// Cycle notation without fixed points, "()" for the identity.
  std::string cycles() const;

private:
  std::vector<int> images_;
};

/// sigma(eps_i - eps_j) = eps_sigma(i) - eps_sigma(j), extended linearly.
RootVector weyl_action(const Permutation& sigma, const RootVector& beta);

/// s_{w_1} o s_{w_2} o ... on n+1 points.
Permutation word_product(int n, const std::vector<int>& word);

/// Word s_i s_{i+1} ... s_{j-1} ... s_{i+1} s_i for the transposition (i j),
/// 1 <= i < j <= n+1. The result is checked by composition before returning.
std::vector<int> transposition_word(int i, int j, int n);

/// Closure of {s_1..s_n} under composition (breadth-first). Intended for small n.
std::vector<Permutation> weyl_group_elements(int n);

// Closed-form case tables for reflections of simple roots, in the form they are
// usually quoted. They are kept so the table can be audited row by row against
// the defining formula; reflect() never consults them.

/// Tabulated s_{alpha_i}(alpha_j), 1 <= i, j <= n.
RootVector tabulated_simple_reflection(int n, int i, int j);

/// Tabulated s_{alpha_ij}(alpha_k), 1 <= i < j <= n, 1 <= k <= n.
RootVector tabulated_root_reflection(int n, int i, int j, int k);

struct CaseTableRow {
  enum class Table { SimpleBySimple, RootBySimple };
  Table table;
  int i, j, k; ///< k is 0 for SimpleBySimple
  std::string branch;
  RootVector tabulated;
  RootVector computed;
};

/// Every row of both tables (rank n) whose tabulated value differs from reflect().
std::vector<CaseTableRow> case_table_discrepancies(int n);

} // namespace chevalley
