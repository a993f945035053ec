#include <set>

#include <gtest/gtest.h>

#include "chevalley/errors.hpp"
#include "chevalley/lie.hpp"
#include "chevalley/linalg.hpp"
#include "support.hpp"

using namespace chevalley;
using namespace chevalley::testing;

namespace {

LieElement random_element(int n, double density = 0.4) {
  std::vector<Rational> c(lie_dimension(n));
  std::bernoulli_distribution keep(density);
  for (auto& x : c)
    if (keep(rng()))
      x = random_rational();
  return LieElement(n, std::move(c));
}

LieElement random_cartan(int n) {
  LieElement h(n);
  for (int k = 1; k <= n; ++k)
    h += random_rational() * LieElement::basis_element(n, LieBasisIndex::cartan(k));
  return h;
}

} // namespace

TEST(LieBasis, EnumerationOrderAndSize) {
  for (int n = 1; n <= 6; ++n) {
    const auto basis = lie_basis(n);
    ASSERT_EQ(basis.size(), static_cast<std::size_t>((n + 1) * (n + 1) - 1));
    for (std::size_t s = 0; s < basis.size(); ++s) {
      EXPECT_EQ(basis_slot(n, basis[s]), s);
      EXPECT_EQ(basis_at(n, s), basis[s]);
    }
  }
  const auto b2 = lie_basis(2);
  EXPECT_EQ(b2.front(), LieBasisIndex::off_diagonal(1, 2));
  EXPECT_EQ(b2[1], LieBasisIndex::off_diagonal(1, 3));
  EXPECT_EQ(b2[2], LieBasisIndex::off_diagonal(2, 1));
  EXPECT_EQ(b2[5], LieBasisIndex::off_diagonal(3, 2));
  EXPECT_EQ(b2[6], LieBasisIndex::cartan(1));
  EXPECT_EQ(b2[7], LieBasisIndex::cartan(2));
}

TEST(LieBasis, RejectsBadIndicesAndRanks) {
  EXPECT_THROW(lie_basis(0), InvalidRank);
  EXPECT_THROW(LieElement(0), InvalidRank);
  EXPECT_THROW(basis_slot(2, LieBasisIndex::off_diagonal(2, 2)), IndexOutOfRange);
  EXPECT_THROW(basis_slot(2, LieBasisIndex::off_diagonal(1, 4)), IndexOutOfRange);
  EXPECT_THROW(basis_slot(2, LieBasisIndex::cartan(3)), IndexOutOfRange);
  EXPECT_THROW(basis_at(2, 8), IndexOutOfRange);
}

TEST(LieElement, MatrixRoundTripAndTrace) {
  for (int k = 0; k < 50; ++k) {
    const int n = uniform_int(1, 5);
    const auto x = random_element(n, 0.7);
    const auto m = x.to_matrix();
    EXPECT_EQ(m.trace(), 0);
    EXPECT_EQ(LieElement::from_matrix(m), x);
  }
  EXPECT_THROW(LieElement::from_matrix(Matrix::identity(3)), DimensionMismatch);
  EXPECT_THROW(LieElement(2, std::vector<Rational>(7)), DimensionMismatch);
}

TEST(Generator, Examples) {
  EXPECT_EQ(generator(1, Chevalley::E, 1).to_matrix(), (Matrix{{0, 1}, {0, 0}}));
  EXPECT_EQ(generator(1, Chevalley::H, 1).to_matrix(), (Matrix{{1, 0}, {0, -1}}));
  EXPECT_EQ(generator(1, Chevalley::F, 1).to_matrix(), (Matrix{{0, 0}, {1, 0}}));
  EXPECT_EQ(generator(3, Chevalley::F, 2).to_matrix(), Matrix::unit(4, 2, 1));
  EXPECT_EQ(generator(3, Chevalley::H, 3).to_matrix(), Matrix::unit(4, 2, 2) - Matrix::unit(4, 3, 3));
}

TEST(Generator, IndexOutOfRange) {
  EXPECT_THROW(generator(2, Chevalley::E, 0), IndexOutOfRange);
  EXPECT_THROW(generator(2, Chevalley::F, 3), IndexOutOfRange);
  EXPECT_THROW(generator(0, Chevalley::H, 1), InvalidRank);
}

TEST(Bracket, Examples) {
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i)
      EXPECT_EQ(bracket(generator(n, Chevalley::E, i), generator(n, Chevalley::F, i)),
                generator(n, Chevalley::H, i));
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(bracket(generator(n, Chevalley::H, 1), generator(n, Chevalley::E, 1)),
              Rational(2) * generator(n, Chevalley::E, 1));
    EXPECT_EQ(bracket(generator(n, Chevalley::H, 1), generator(n, Chevalley::F, 1)),
              Rational(-2) * generator(n, Chevalley::F, 1));
  }
  const auto e12 = LieElement::basis_element(3, LieBasisIndex::off_diagonal(1, 2));
  const auto e34 = LieElement::basis_element(3, LieBasisIndex::off_diagonal(3, 4));
  EXPECT_EQ(bracket(e12, e34), LieElement(3));
  EXPECT_THROW(bracket(LieElement(2), LieElement(3)), DimensionMismatch);
}

TEST(Bracket, JacobiExhaustiveOnBasisForSmallRanks) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<LieElement> b;
    for (const auto& idx : lie_basis(n))
      b.push_back(LieElement::basis_element(n, idx));
    for (const auto& x : b)
      for (const auto& y : b) {
        const auto xy = bracket(x, y);
        EXPECT_EQ(xy, -bracket(y, x));
        for (const auto& z : b) {
          const auto sum = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, xy);
          ASSERT_EQ(sum, LieElement(n));
        }
      }
  }
}

TEST(Bracket, JacobiAndAntisymmetryOnRandomTriples) {
  for (int k = 0; k < 30; ++k) {
    const int n = uniform_int(4, 6);
    const auto x = random_element(n), y = random_element(n), z = random_element(n);
    EXPECT_EQ(bracket(x, y), -bracket(y, x));
    EXPECT_EQ(bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y)),
              LieElement(n));
  }
}

TEST(AdMatrix, CartanElementActsDiagonallyWithRootValues) {
  for (int n = 1; n <= 4; ++n) {
    const auto ad = ad_matrix(generator(n, Chevalley::H, 1));
    EXPECT_TRUE(ad.is_diagonal());
    // (eps_i - eps_j)(h_1): +1 for slot 1, -1 for slot 2
    auto eps_h1 = [](int k) { return k == 1 ? 1 : k == 2 ? -1 : 0; };
    for (std::size_t s = 0; s < ad.dim(); ++s) {
      const auto idx = basis_at(n, s);
      const int expected = idx.is_cartan() ? 0 : eps_h1(idx.i) - eps_h1(idx.j);
      EXPECT_EQ(ad(s, s), expected) << idx.label();
    }
  }
  EXPECT_TRUE(ad_matrix(LieElement(3)).is_zero());
}

TEST(AdMatrix, AdOfE1CubesToZeroInRankOne) {
  const auto ad = ad_matrix(generator(1, Chevalley::E, 1));
  const auto sq = naive_mul(ad, ad);
  EXPECT_FALSE(sq.is_zero());
  EXPECT_TRUE(naive_mul(sq, ad).is_zero());
}

TEST(AdMatrix, ChevalleyGeneratorsHaveCubeZero) {
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (auto which : {Chevalley::E, Chevalley::F}) {
        const auto ad = ad_matrix(generator(n, which, i));
        EXPECT_FALSE(power(ad, 2).is_zero());
        EXPECT_TRUE(power(ad, 3).is_zero());
        EXPECT_EQ(nilpotency_index(ad), 3u);
      }
}

TEST(AdMatrix, IsALieHomomorphism) {
  for (int k = 0; k < 20; ++k) {
    const int n = uniform_int(1, 3);
    const auto x = random_element(n), y = random_element(n);
    const auto ax = ad_matrix(x), ay = ad_matrix(y);
    EXPECT_EQ(ad_matrix(bracket(x, y)), naive_mul(ax, ay) - naive_mul(ay, ax));
  }
}

TEST(AdMatrix, ColumnsAreBracketsWithBasis) {
  const int n = 2;
  const auto x = random_element(n, 0.8);
  const auto ad = ad_matrix(x);
  for (std::size_t s = 0; s < ad.dim(); ++s) {
    const auto image = bracket(x, LieElement::basis_element(n, basis_at(n, s)));
    for (std::size_t r = 0; r < ad.dim(); ++r)
      EXPECT_EQ(ad(r, s), image.coords()[r]);
  }
}

TEST(DecomposeByCartan, RankOneH) {
  const auto buckets = decompose_by_cartan(1, generator(1, Chevalley::H, 1));
  ASSERT_EQ(buckets.size(), 3u);
  EXPECT_EQ(buckets.at(Rational(2)), std::vector{LieBasisIndex::off_diagonal(1, 2)});
  EXPECT_EQ(buckets.at(Rational(-2)), std::vector{LieBasisIndex::off_diagonal(2, 1)});
  EXPECT_EQ(buckets.at(Rational(0)), std::vector{LieBasisIndex::cartan(1)});
}

TEST(DecomposeByCartan, RankTwoEigenvaluesMatchRootEvaluation) {
  // oracle: evaluate (eps_i - eps_j)(h_1) over every ordered pair, plus 0 for h
  const std::vector<int> diag{1, -1, 0};
  std::set<Rational> oracle{Rational(0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j)
        oracle.insert(Rational(diag[static_cast<std::size_t>(i)] - diag[static_cast<std::size_t>(j)]));
  EXPECT_EQ(oracle, (std::set<Rational>{-2, -1, 0, 1, 2}));
  const auto buckets = decompose_by_cartan(2, generator(2, Chevalley::H, 1));
  std::set<Rational> got;
  for (const auto& [ev, idx] : buckets)
    got.insert(ev);
  EXPECT_EQ(got, oracle);
}

TEST(DecomposeByCartan, ZeroElementGivesSingleBucket) {
  for (int n = 1; n <= 4; ++n) {
    const auto buckets = decompose_by_cartan(n, LieElement(n));
    ASSERT_EQ(buckets.size(), 1u);
    EXPECT_EQ(buckets.begin()->first, 0);
    EXPECT_EQ(buckets.begin()->second, lie_basis(n));
  }
}

TEST(DecomposeByCartan, EigenvalueOnEijIsDiagonalDifference) {
  for (int k = 0; k < 20; ++k) {
    const int n = uniform_int(1, 5);
    const auto h = random_cartan(n);
    const auto d = cartan_diagonal(h);
    for (const auto& [ev, indices] : decompose_by_cartan(n, h))
      for (const auto& idx : indices) {
        if (idx.is_cartan())
          EXPECT_EQ(ev, 0);
        else
          EXPECT_EQ(ev, Rational(d[static_cast<std::size_t>(idx.i - 1)] - d[static_cast<std::size_t>(idx.j - 1)]));
      }
  }
}

TEST(DecomposeByCartan, RejectsNonDiagonal) {
  EXPECT_THROW(decompose_by_cartan(2, generator(2, Chevalley::E, 1)), NotDiagonal);
  EXPECT_THROW(decompose_by_cartan(3, generator(2, Chevalley::H, 1)), DimensionMismatch);
}
