#include "chevalley/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "chevalley/errors.hpp"
#include "chevalley/lie.hpp"

namespace chevalley {

BraidWord::BraidWord(int n, std::vector<BraidLetter> letters) : n_(n), letters_(std::move(letters)) {
  require_rank(n);
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > n)
      throw IndexOutOfRange("generator S_" + std::to_string(l.index) + " outside 1.." +
                            std::to_string(n));
    if (l.exponent != 1 && l.exponent != -1)
      throw std::invalid_argument("letter exponent must be +1 or -1");
  }
}

BraidWord BraidWord::parse(int n, std::string_view text) {
  std::vector<BraidLetter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int v = 0;
    const char* first = tok.data();
    if (*first == '+')
      ++first;
    const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v == 0)
      throw ParseError("bad braid letter '" + tok + "'");
    letters.push_back({std::abs(v), v > 0 ? 1 : -1});
  }
  return BraidWord(n, std::move(letters));
}

BraidWord BraidWord::power(int n, int i, int e) {
  std::vector<BraidLetter> letters(static_cast<std::size_t>(std::abs(e)), {i, e > 0 ? 1 : -1});
  return BraidWord(n, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    inv.push_back({it->index, -it->exponent});
  return BraidWord(n_, std::move(inv));
}

BraidWord BraidWord::free_reduced() const {
  std::vector<BraidLetter> stack;
  for (const auto& l : letters_) {
    if (!stack.empty() && stack.back().index == l.index && stack.back().exponent == -l.exponent)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(n_, std::move(stack));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.n_ != b.n_)
    throw DimensionMismatch("braid words of different rank");
  auto letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.n_, std::move(letters));
}

std::string BraidWord::to_string() const {
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty())
      s += ' ';
    s += std::to_string(l.index * l.exponent);
  }
  return s;
}

BraidWord concat_reduce(const BraidWord& a, const BraidWord& b) { return (a * b).free_reduced(); }

Permutation natural_projection(const BraidWord& w) {
  auto p = Permutation::identity(w.rank() + 1);
  for (const auto& l : w.letters())
    p = p * Permutation::simple(w.rank(), l.index);
  return p;
}

bool is_pure(const BraidWord& w) { return natural_projection(w).is_identity(); }

CoxeterMatrix::CoxeterMatrix(int n) : n_(n) { require_rank(n); }

int CoxeterMatrix::operator()(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw IndexOutOfRange("Coxeter index outside 1.." + std::to_string(n_));
  if (i == j)
    return 1;
  return std::abs(i - j) == 1 ? 3 : 2;
}

std::string group_tag(RelationFamily f) {
  switch (f) {
  case RelationFamily::Braid:
    return "2.9";
  case RelationFamily::SquareCommute:
    return "2.10";
  case RelationFamily::FourthPower:
    return "2.11";
  case RelationFamily::SquareConjugation:
    return "2.12";
  }
  throw std::logic_error("unknown relation family");
}

std::string adjoint_tag(RelationFamily f) {
  switch (f) {
  case RelationFamily::Braid:
    return "0.2";
  case RelationFamily::SquareCommute:
    return "0.4";
  case RelationFamily::FourthPower:
    return "0.5";
  case RelationFamily::SquareConjugation:
    return "0.6";
  }
  throw std::logic_error("unknown relation family");
}

RelationFamily family_from_tag(std::string_view tag) {
  for (auto f : {RelationFamily::Braid, RelationFamily::SquareCommute, RelationFamily::FourthPower,
                 RelationFamily::SquareConjugation})
    if (tag == group_tag(f) || tag == adjoint_tag(f))
      return f;
  throw ParseError("unknown relation tag '" + std::string(tag) + "'");
}

namespace {

BraidWord alternating(int n, int first, int second, int length) {
  std::vector<BraidLetter> letters;
  for (int k = 0; k < length; ++k)
    letters.push_back({k % 2 == 0 ? first : second, 1});
  return BraidWord(n, std::move(letters));
}

} // namespace

std::vector<RelationInstance> relation_instances(int n) {
  const CoxeterMatrix m(n);
  std::vector<RelationInstance> out;
  const BraidWord none(n);

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j)
        out.push_back({RelationFamily::Braid, i, j, alternating(n, i, j, m(i, j)),
                       alternating(n, j, i, m(i, j))});

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) {
        const auto si2 = BraidWord::power(n, i, 2);
        const auto sj2 = BraidWord::power(n, j, 2);
        out.push_back({RelationFamily::SquareCommute, i, j, si2 * sj2, sj2 * si2});
      }

  for (int i = 1; i <= n; ++i)
    out.push_back({RelationFamily::FourthPower, i, i, BraidWord::power(n, i, 4), none});

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) {
        const int e = -2 * pairing(RootVector::simple(n, j), i);
        const auto sj2 = BraidWord::power(n, j, 2);
        const auto left = BraidWord::power(n, i, 1) * sj2 * BraidWord::power(n, i, -1);
        out.push_back({RelationFamily::SquareConjugation, i, j, left, sj2 * BraidWord::power(n, i, e)});
      }
  return out;
}

} // namespace chevalley
