#include <gtest/gtest.h>

#include "chevalley/braid.hpp"
#include "chevalley/errors.hpp"
#include "support.hpp"

using namespace chevalley;
using namespace chevalley::testing;

namespace {

BraidWord w(int n, const char* text) { return BraidWord::parse(n, text); }

// Oracle for free reduction: repeatedly cancel a randomly chosen adjacent
// inverse pair until none is left.
BraidWord reduce_in_random_order(const BraidWord& word) {
  auto letters = word.letters();
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t k = 0; k + 1 < letters.size(); ++k)
      if (letters[k].index == letters[k + 1].index && letters[k].exponent == -letters[k + 1].exponent)
        spots.push_back(k);
    if (spots.empty())
      break;
    const auto k = spots[static_cast<std::size_t>(uniform_int(0, static_cast<int>(spots.size()) - 1))];
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(k), letters.begin() + static_cast<std::ptrdiff_t>(k + 2));
  }
  return BraidWord(word.rank(), letters);
}

} // namespace

TEST(BraidWord, ParseAndPrint) {
  const auto word = w(3, "1 2 -1  +3");
  EXPECT_EQ(word.size(), 4u);
  EXPECT_EQ(word.letters()[2], (BraidLetter{1, -1}));
  EXPECT_EQ(word.to_string(), "1 2 -1 3");
  EXPECT_TRUE(w(2, "   ").empty());
}

TEST(BraidWord, ParseErrors) {
  EXPECT_THROW(w(2, "1 x"), ParseError);
  EXPECT_THROW(w(2, "0"), ParseError);
  EXPECT_THROW(w(2, "1.5"), ParseError);
  EXPECT_THROW(w(2, "3"), IndexOutOfRange);
  EXPECT_THROW(w(2, "-3"), IndexOutOfRange);
  EXPECT_THROW(w(0, ""), InvalidRank);
}

TEST(ConcatReduce, Examples) {
  EXPECT_TRUE(concat_reduce(w(2, "1"), w(2, "-1")).empty());
  EXPECT_EQ(concat_reduce(w(2, "1"), w(2, "2")), w(2, "1 2"));
  EXPECT_EQ(concat_reduce(w(2, "1 2"), w(2, "-2 1")), w(2, "1 1"));
  EXPECT_THROW(concat_reduce(w(2, "1"), w(3, "1")), DimensionMismatch);
}

TEST(ConcatReduce, FreeReductionIsConfluent) {
  for (int k = 0; k < 300; ++k) {
    const int n = uniform_int(1, 3);
    const auto word = random_word(n, 16);
    const auto canonical = word.free_reduced();
    for (int trial = 0; trial < 3; ++trial)
      EXPECT_EQ(reduce_in_random_order(word), canonical) << word.to_string();
  }
}

TEST(NaturalProjection, Examples) {
  EXPECT_EQ(natural_projection(w(1, "1")), Permutation::transposition(2, 1, 2));
  EXPECT_TRUE(natural_projection(w(1, "1 1")).is_identity());
  // oracle: (1 2)(2 3)(1 2) applied point by point
  EXPECT_EQ(natural_projection(w(2, "1 2 1")).images(), compose_transpositions(3, {{1, 2}, {2, 3}, {1, 2}}));
  EXPECT_EQ(natural_projection(w(2, "1 2 1")), Permutation::transposition(3, 1, 3));
  EXPECT_EQ(natural_projection(w(2, "-1 2 -1")), Permutation::transposition(3, 1, 3));
}

TEST(NaturalProjection, IsAHomomorphism) {
  for (int k = 0; k < 200; ++k) {
    const int n = uniform_int(1, 5);
    const auto a = random_word(n, 10), b = random_word(n, 10);
    EXPECT_EQ(natural_projection(a * b), natural_projection(a) * natural_projection(b));
    EXPECT_EQ(natural_projection(concat_reduce(a, b)), natural_projection(a) * natural_projection(b));
  }
}

TEST(IsPure, Examples) {
  EXPECT_TRUE(is_pure(BraidWord(2)));
  EXPECT_FALSE(is_pure(w(2, "1")));
  EXPECT_TRUE(is_pure(w(2, "1 1")));
  EXPECT_TRUE(is_pure(w(2, "1 2 1 -2 -1 -2")) == natural_projection(w(2, "1 2 1 -2 -1 -2")).is_identity());
}

TEST(IsPure, WordTimesInverseIsPure) {
  for (int k = 0; k < 200; ++k) {
    const auto a = random_word(uniform_int(1, 5), 12);
    EXPECT_TRUE(is_pure(a * a.inverse()));
    EXPECT_TRUE(concat_reduce(a, a.inverse()).empty());
  }
}

TEST(CoxeterMatrix, Entries) {
  for (int n = 1; n <= 6; ++n) {
    const CoxeterMatrix m(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const int expected = i == j ? 1 : std::abs(i - j) == 1 ? 3 : 2;
        EXPECT_EQ(m(i, j), expected);
        EXPECT_EQ(m(i, j), m(j, i));
      }
  }
  EXPECT_THROW(CoxeterMatrix(2)(1, 3), IndexOutOfRange);
}

TEST(RelationInstances, Examples) {
  auto find = [](int n, RelationFamily f, int i, int j) {
    for (const auto& r : relation_instances(n))
      if (r.family == f && r.i == i && r.j == j)
        return r;
    throw std::runtime_error("instance not emitted");
  };
  const auto braid = find(2, RelationFamily::Braid, 1, 2);
  EXPECT_EQ(braid.left, w(2, "1 2 1"));
  EXPECT_EQ(braid.right, w(2, "2 1 2"));
  const auto far = find(3, RelationFamily::Braid, 1, 3);
  EXPECT_EQ(far.left, w(3, "1 3"));
  EXPECT_EQ(far.right, w(3, "3 1"));
  const auto conj = find(2, RelationFamily::SquareConjugation, 1, 2);
  EXPECT_EQ(conj.left, w(2, "1 2 2 -1"));
  EXPECT_EQ(conj.right, w(2, "2 2 1 1"));
  const auto conj_far = find(3, RelationFamily::SquareConjugation, 3, 1);
  EXPECT_EQ(conj_far.left, w(3, "3 1 1 -3"));
  EXPECT_EQ(conj_far.right, w(3, "1 1"));
  const auto fourth = find(1, RelationFamily::FourthPower, 1, 1);
  EXPECT_EQ(fourth.left, w(1, "1 1 1 1"));
  EXPECT_TRUE(fourth.right.empty());
  const auto sq = find(3, RelationFamily::SquareCommute, 2, 3);
  EXPECT_EQ(sq.left, w(3, "2 2 3 3"));
  EXPECT_EQ(sq.right, w(3, "3 3 2 2"));
}

TEST(RelationInstances, CountsAndOrdering) {
  for (int n = 1; n <= 6; ++n) {
    const auto all = relation_instances(n);
    EXPECT_EQ(all.size(), static_cast<std::size_t>(3 * n * (n - 1) + n));
    for (std::size_t k = 1; k < all.size(); ++k) {
      const auto& a = all[k - 1];
      const auto& b = all[k];
      EXPECT_LT(std::tie(a.family, a.i, a.j), std::tie(b.family, b.i, b.j));
    }
  }
}

TEST(RelationInstances, ConsistentWithTheWeylQuotient) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& r : relation_instances(n))
      EXPECT_EQ(natural_projection(r.left), natural_projection(r.right))
          << group_tag(r.family) << " " << r.i << "," << r.j;
}

TEST(RelationTags, RoundTrip) {
  for (auto f : {RelationFamily::Braid, RelationFamily::SquareCommute, RelationFamily::FourthPower,
                 RelationFamily::SquareConjugation}) {
    EXPECT_EQ(family_from_tag(group_tag(f)), f);
    EXPECT_EQ(family_from_tag(adjoint_tag(f)), f);
  }
  EXPECT_EQ(group_tag(RelationFamily::SquareConjugation), "2.12");
  EXPECT_EQ(adjoint_tag(RelationFamily::FourthPower), "0.5");
  EXPECT_THROW(family_from_tag("0.3"), ParseError);
}
