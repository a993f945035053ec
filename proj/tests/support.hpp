#pragma once

// Test-only generators and brute-force oracles. Nothing here calls into the
// elimination or product kernels it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "chevalley/braid.hpp"
#include "chevalley/matrix.hpp"
#include "chevalley/rational.hpp"

namespace chevalley::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed'c0de'2023ull);
  return gen;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Nonzero rational with small numerator and denominator.
inline Rational random_nonzero_rational(int bound = 7) {
  int p = 0;
  while (p == 0)
    p = uniform_int(-bound, bound);
  Rational q(p, uniform_int(1, bound));
  q.canonicalize();
  return q;
}

inline Rational random_rational(int bound = 7) {
  Rational q(uniform_int(-bound, bound), uniform_int(1, bound));
  q.canonicalize();
  return q;
}

inline Matrix random_matrix(std::size_t dim, double density = 1.0) {
  Matrix m(dim);
  std::bernoulli_distribution keep(density);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (keep(rng()))
        m(r, c) = random_rational();
  return m;
}

inline Matrix random_strictly_upper(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r + 1; c < dim; ++c)
      m(r, c) = random_rational();
  return m;
}

inline BraidWord random_word(int n, int max_len) {
  std::vector<BraidLetter> letters;
  const int len = uniform_int(0, max_len);
  for (int k = 0; k < len; ++k)
    letters.push_back({uniform_int(1, n), uniform_int(0, 1) ? 1 : -1});
  return BraidWord(n, std::move(letters));
}

/// Plain triple-loop product, written out again so oracles do not share code
/// with the library kernels.
inline Matrix naive_mul(const Matrix& a, const Matrix& b) {
  Matrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        c(i, j) += a(i, k) * b(k, j);
  return c;
}

/// Leibniz expansion over all permutations; only for dim <= 6.
inline Rational leibniz_det(const Matrix& a) {
  std::vector<std::size_t> p(a.dim());
  std::iota(p.begin(), p.end(), 0);
  Rational total(0);
  do {
    int inversions = 0;
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = x + 1; y < p.size(); ++y)
        inversions += p[x] > p[y];
    Rational term(inversions % 2 ? -1 : 1);
    for (std::size_t r = 0; r < p.size(); ++r)
      term *= a(r, p[r]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Apply a product of transpositions to the list 1..m, mapping each
/// transposition (a b) as a function; the composite is applied right to left,
/// matching f o g.
inline std::vector<int> compose_transpositions(int m, const std::vector<std::pair<int, int>>& ts) {
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int x = 1; x <= m; ++x) {
    int y = x;
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
      if (y == it->first)
        y = it->second;
      else if (y == it->second)
        y = it->first;
    }
    images[static_cast<std::size_t>(x - 1)] = y;
  }
  return images;
}

} // namespace chevalley::testing
