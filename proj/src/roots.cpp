#include "chevalley/roots.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "chevalley/errors.hpp"
#include "chevalley/lie.hpp"

namespace chevalley {

namespace {

void require_index(int n, int i, const char* what) {
  if (i < 1 || i > n)
    throw IndexOutOfRange(std::string(what) + " " + std::to_string(i) + " outside 1.." +
                          std::to_string(n));
}

} // namespace

RootVector::RootVector(int n, std::vector<int> eps) : n_(n), eps_(std::move(eps)) {
  require_rank(n);
  if (eps_.size() != static_cast<std::size_t>(n + 1))
    throw DimensionMismatch("root vector needs n+1 coordinates");
  if (std::accumulate(eps_.begin(), eps_.end(), 0) != 0)
    throw std::invalid_argument("root vector coordinates must sum to zero");
}

RootVector RootVector::zero(int n) {
  require_rank(n);
  return RootVector(n, std::vector<int>(static_cast<std::size_t>(n + 1), 0));
}

RootVector RootVector::root(int n, int i, int j) {
  require_index(n + 1, i, "epsilon index");
  require_index(n + 1, j, "epsilon index");
  if (i == j)
    throw NotARoot("eps_i - eps_i is not a root");
  auto r = zero(n);
  r.eps_[static_cast<std::size_t>(i - 1)] = 1;
  r.eps_[static_cast<std::size_t>(j - 1)] = -1;
  return r;
}

RootVector RootVector::simple(int n, int i) {
  require_index(n, i, "simple root");
  return root(n, i, i + 1);
}

bool RootVector::is_root() const {
  int plus = 0, minus = 0;
  for (int c : eps_) {
    if (c == 1)
      ++plus;
    else if (c == -1)
      ++minus;
    else if (c != 0)
      return false;
  }
  return plus == 1 && minus == 1;
}

RootVector RootVector::operator-() const { return -1 * *this; }

RootVector operator+(const RootVector& a, const RootVector& b) {
  if (a.n_ != b.n_)
    throw DimensionMismatch("rank mismatch");
  auto out = a;
  for (std::size_t k = 0; k < out.eps_.size(); ++k)
    out.eps_[k] += b.eps_[k];
  return out;
}

RootVector operator*(int s, const RootVector& a) {
  auto out = a;
  for (auto& c : out.eps_)
    c *= s;
  return out;
}

std::string RootVector::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < eps_.size(); ++k) {
    const int c = eps_[k];
    if (c == 0)
      continue;
    if (c < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    if (std::abs(c) != 1)
      s += std::to_string(std::abs(c));
    s += "e" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

std::vector<RootVector> all_roots(int n) {
  std::vector<RootVector> roots;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j)
      if (i != j)
        roots.push_back(RootVector::root(n, i, j));
  return roots;
}

int pairing(const RootVector& beta, int i) {
  require_index(beta.rank(), i, "coroot index");
  return beta[i] - beta[i + 1];
}

int coroot_pairing(const RootVector& beta, const RootVector& alpha) {
  if (!alpha.is_root())
    throw NotARoot(alpha.to_string() + " is not a root");
  if (alpha.rank() != beta.rank())
    throw DimensionMismatch("rank mismatch");
  const auto& e = alpha.eps();
  const auto a = std::find(e.begin(), e.end(), 1) - e.begin() + 1;
  const auto b = std::find(e.begin(), e.end(), -1) - e.begin() + 1;
  return beta[static_cast<int>(a)] - beta[static_cast<int>(b)];
}

RootVector reflect(const RootVector& alpha, const RootVector& beta) {
  return beta - coroot_pairing(beta, alpha) * alpha;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int m = points();
  if (m < 1)
    throw DimensionMismatch("permutation needs at least one point");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("images do not form a bijection");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int points) {
  std::vector<int> img(static_cast<std::size_t>(points));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int points, int a, int b) {
  require_index(points, a, "point");
  require_index(points, b, "point");
  auto p = identity(points);
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::simple(int n, int i) {
  require_index(n, i, "simple transposition");
  return transposition(n + 1, i, i + 1);
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= points(); ++k)
    if ((*this)(k) != k)
      return false;
  return true;
}

int Permutation::sign() const {
  // (-1)^(points - cycles)
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (int k = 1; k <= points(); ++k) {
    if (seen[static_cast<std::size_t>(k - 1)])
      continue;
    ++cycles;
    for (int x = k; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x))
      seen[static_cast<std::size_t>(x - 1)] = true;
  }
  return (points() - cycles) % 2 == 0 ? 1 : -1;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int k = 1; k <= points(); ++k)
    img[static_cast<std::size_t>((*this)(k) - 1)] = k;
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (inner.points() != points())
    throw DimensionMismatch("permutations act on different point sets");
  std::vector<int> img(images_.size());
  for (int k = 1; k <= points(); ++k)
    img[static_cast<std::size_t>(k - 1)] = (*this)(inner(k));
  return Permutation(std::move(img));
}

std::string Permutation::one_line() const {
  std::string s = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k)
      s += ' ';
    s += std::to_string(images_[k]);
  }
  return s + "]";
}

std::string Permutation::cycles() const {
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (int k = 1; k <= points(); ++k) {
    if (seen[static_cast<std::size_t>(k - 1)] || (*this)(k) == k)
      continue;
    s += '(';
    for (int x = k; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      if (x != k)
        s += ' ';
      s += std::to_string(x);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

RootVector weyl_action(const Permutation& sigma, const RootVector& beta) {
  if (sigma.points() != beta.rank() + 1)
    throw DimensionMismatch("permutation degree does not match root rank");
  std::vector<int> out(beta.eps().size(), 0);
  for (int k = 1; k <= sigma.points(); ++k)
    out[static_cast<std::size_t>(sigma(k) - 1)] = beta[k];
  return RootVector(beta.rank(), std::move(out));
}

Permutation word_product(int n, const std::vector<int>& word) {
  auto p = Permutation::identity(n + 1);
  for (int letter : word)
    p = p * Permutation::simple(n, letter);
  return p;
}

std::vector<int> transposition_word(int i, int j, int n) {
  require_rank(n);
  if (i < 1 || j > n + 1 || i >= j)
    throw IndexOutOfRange("transposition (" + std::to_string(i) + " " + std::to_string(j) +
                          ") needs 1 <= i < j <= " + std::to_string(n + 1));
  std::vector<int> word;
  for (int k = i; k <= j - 1; ++k)
    word.push_back(k);
  for (int k = j - 2; k >= i; --k)
    word.push_back(k);
  if (word_product(n, word) != Permutation::transposition(n + 1, i, j))
    throw std::logic_error("transposition word failed its composition check");
  return word;
}

std::vector<Permutation> weyl_group_elements(int n) {
  require_rank(n);
  std::set<Permutation> seen{Permutation::identity(n + 1)};
  std::vector<Permutation> frontier{Permutation::identity(n + 1)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (int i = 1; i <= n; ++i) {
        auto q = p * Permutation::simple(n, i);
        if (seen.insert(q).second)
          next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

namespace {

// eps_a - eps_b as written in a table; a == b yields the zero vector, which the
// audit then reports as a non-root.
RootVector table_entry(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n + 1 || b > n + 1)
    return RootVector::zero(n);
  if (a == b)
    return RootVector::zero(n);
  return RootVector::root(n, a, b);
}

std::string simple_branch(int i, int j) {
  if (j == i)
    return "j = i";
  if (j == i + 1)
    return "j = i+1";
  if (j == i - 1)
    return "j = i-1";
  return "|j-i| >= 2";
}

std::string root_branch(int i, int j, int k) {
  if (k == j + 1)
    return "k = j+1";
  if (k == i - 1)
    return "k = i-1";
  if (k == j)
    return "k = j";
  if (k == i)
    return "k = i";
  return "otherwise";
}

} // namespace

RootVector tabulated_simple_reflection(int n, int i, int j) {
  require_index(n, i, "simple root");
  require_index(n, j, "simple root");
  if (j == i)
    return -RootVector::simple(n, i);
  if (j == i + 1)
    return table_entry(n, i, j); // alpha_{ij}
  if (j == i - 1)
    return table_entry(n, j, i); // alpha_{ji}
  return RootVector::simple(n, j);
}

RootVector tabulated_root_reflection(int n, int i, int j, int k) {
  require_index(n, i, "root index");
  require_index(n, j, "root index");
  require_index(n, k, "simple root");
  if (i >= j)
    throw IndexOutOfRange("tabulated root reflection needs i < j");
  if (k == j + 1)
    return table_entry(n, i, k); // alpha_{ik}
  if (k == i - 1)
    return table_entry(n, k, j); // alpha_{kj}
  if (k == j)
    return -table_entry(n, i, j - 1); // -alpha_{i,j-1}
  if (k == i)
    return -table_entry(n, i + 1, j); // -alpha_{i+1,j}
  return RootVector::simple(n, k);
}

std::vector<CaseTableRow> case_table_discrepancies(int n) {
  std::vector<CaseTableRow> rows;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto tab = tabulated_simple_reflection(n, i, j);
      auto got = reflect(RootVector::simple(n, i), RootVector::simple(n, j));
      if (tab != got)
        rows.push_back({CaseTableRow::Table::SimpleBySimple, i, j, 0, simple_branch(i, j), tab, got});
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        auto tab = tabulated_root_reflection(n, i, j, k);
        auto got = reflect(RootVector::root(n, i, j), RootVector::simple(n, k));
        if (tab != got)
          rows.push_back({CaseTableRow::Table::RootBySimple, i, j, k, root_branch(i, j, k), tab, got});
      }
  return rows;
}

} // namespace chevalley
