#include <gtest/gtest.h>

#include <random>

#include "chevalley/matrix.hpp"
#include "chevalley/rational.hpp"

using namespace chevalley;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("-7").to_string(), "-7");
  EXPECT_EQ(Rational::parse(" 0/5 ").to_string(), "0");
  EXPECT_THROW(Rational::parse("4/-2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST(Rational, SpillsToBigAndBack) {
  Rational big = Rational(INT64_MAX) * Rational(INT64_MAX);
  EXPECT_EQ(big.to_string(), "85070591730234615847396907784232501249");
  Rational back = big / Rational(INT64_MAX);
  EXPECT_EQ(back, Rational(INT64_MAX));
  EXPECT_TRUE(back.to_int64().has_value());
  Rational m(INT64_MIN);
  EXPECT_EQ((-m).to_string(), "9223372036854775808");
}

// Random arithmetic against GMP's rationals.
TEST(Rational, AgreesWithMpq) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-(1LL << 40), 1LL << 40);
  for (int trial = 0; trial < 2000; ++trial) {
    std::int64_t a = dist(rng), b = dist(rng) | 1, c = dist(rng), d = dist(rng) | 1;
    Rational x(a, b), y(c, d);
    mpq_class qx(a, b), qy(c, d);
    qx.canonicalize();
    qy.canonicalize();
    EXPECT_EQ((x + y).to_mpq(), qx + qy);
    EXPECT_EQ((x * y).to_mpq(), qx * qy);
    EXPECT_EQ((x - y).to_mpq(), qx - qy);
    if (c != 0) EXPECT_EQ((x / y).to_mpq(), qx / qy);
    EXPECT_EQ(x < y, qx < qy);
  }
}

TEST(Rational, Binomial) {
  EXPECT_EQ(binomial(5, 2), Rational(10));
  EXPECT_EQ(binomial(-1, 3), Rational(-1));
  EXPECT_EQ(binomial(2, 3), Rational(0));
  EXPECT_EQ(binomial(7, 0), Rational(1));
}

TEST(Matrix, HermiteNormalForm) {
  IntMatrix g = {{2, 4}, {3, 6}, {0, 5}};
  IntMatrix h = hermite_normal_form(g);
  // The lattice is Z(1,2) + Z(0,5).
  IntMatrix expect = {{1, 2}, {0, 5}};
  EXPECT_EQ(h, expect);
}

TEST(Matrix, SmithFactors) {
  IntMatrix a = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  auto f = smith_invariant_factors(a);
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[2], 2);
  EXPECT_EQ(f[3], 2);
}

TEST(Matrix, EchelonCoordinates) {
  RatMatrix basis = hermite_normal_form(RatMatrix{{Rational(2), Rational(0)}, {Rational(0), Rational(3)}});
  auto c = coordinates_in_echelon_basis(basis, {Rational(1), Rational(3)});
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[0], Rational(1, 2));
  EXPECT_EQ((*c)[1], Rational(1));
}

TEST(Matrix, InverseAndDeterminant) {
  RatMatrix m = {{Rational(2), Rational(1)}, {Rational(3), Rational(2)}};
  EXPECT_EQ(determinant(m), Rational(1));
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, RatMatrix::identity(2));
}
