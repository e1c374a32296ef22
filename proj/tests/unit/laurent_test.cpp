#include <gtest/gtest.h>

#include "polycount/laurent.hpp"

using namespace polycount;

TEST(Laurent, BinomialSeries) {
  const LaurentSeries inv = LaurentSeries::one_plus_z_pow(-1, 6);
  for (long k = 0; k <= 6; ++k) EXPECT_EQ(inv.coefficient(k), Rational(k % 2 == 0 ? 1 : -1));
  const LaurentSeries sq = LaurentSeries::one_plus_z_pow(2, 6);
  EXPECT_EQ(sq.coefficient(1), Rational(2));
  EXPECT_EQ(sq.coefficient(3), Rational(0));
}

TEST(Laurent, ProductTruncatesConsistently) {
  const LaurentSeries a = LaurentSeries::one_plus_z_pow(3, 5);
  const LaurentSeries b = LaurentSeries::one_plus_z_pow(-3, 5);
  const LaurentSeries one = a * b;
  EXPECT_EQ(one.truncation(), 5);
  EXPECT_EQ(one.coefficient(0), Rational(1));
  for (long k = 1; k <= 5; ++k) EXPECT_EQ(one.coefficient(k), Rational(0));

  const LaurentSeries shifted = LaurentSeries::monomial(-2, Rational(1), 3) * LaurentSeries::one_plus_z_pow(-1, 5);
  EXPECT_EQ(shifted.min_order(), -2);
  EXPECT_EQ(shifted.truncation(), 3);
  EXPECT_EQ(shifted.coefficient(-1), Rational(-1));
}

TEST(Laurent, SumExtendsDownward) {
  LaurentSeries s = LaurentSeries::monomial(0, Rational(1), 4);
  s += LaurentSeries::monomial(-3, Rational(2), 6);
  EXPECT_EQ(s.min_order(), -3);
  EXPECT_EQ(s.truncation(), 4);
  EXPECT_EQ(s.coefficient(-3), Rational(2));
  EXPECT_EQ(s.to_string(), "(2)z^-3 + (1)z^0 + O(z^5)");
}
