#include <gtest/gtest.h>

#include "polycount/identities.hpp"

using namespace polycount;

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(bernoulli(0), Rational(1));
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
  for (long i = 3; i <= 21; i += 2) EXPECT_EQ(bernoulli(i), Rational(0));
}

TEST(MomentPoly, SeedsAndFirstStep) {
  const MultiPoly x = MultiPoly::variable(1, 0);
  const MomentPolyPair zero = moment_poly(0);
  EXPECT_EQ(zero.p_alpha, Rational(1, 2) * (x * x - x));
  EXPECT_EQ(zero.q_alpha, Rational(1, 2) * (x * x));

  const MomentPolyPair one = moment_poly(1);
  const MultiPoly xm1 = x - MultiPoly::constant(1, Rational(1));
  EXPECT_EQ(one.p_alpha, x * x * xm1 * xm1);
  const MultiPoly inner = Rational(2) * x * x - Rational(4) * x + MultiPoly::constant(1, Rational(1));
  EXPECT_EQ(one.q_alpha, Rational(1, 2) * x * x * inner);
}

TEST(MomentSums, KnownValues) {
  EXPECT_EQ(moment_sum_direct(3, 0, Parity::Even), Rational(12));
  EXPECT_EQ(moment_sum_direct(3, 0, Parity::Odd), Rational(18));
  EXPECT_EQ(moment_sum_direct(2, 1, Parity::Even), Rational(8));
  EXPECT_EQ(moment_sum_closed(3, 0, Parity::Even), Rational(12));
  EXPECT_EQ(moment_sum_closed(3, 0, Parity::Odd), Rational(18));
  EXPECT_EQ(moment_sum_closed(2, 1, Parity::Even), Rational(8));
  EXPECT_THROW(moment_sum_closed(0, 1, Parity::Even), ContractError);
}

TEST(MomentSums, ClosedMatchesDirect) {
  for (long alpha = 0; alpha <= 4; ++alpha) {
    for (long n = 1; n <= 25; ++n) {
      for (Parity p : {Parity::Even, Parity::Odd}) {
        EXPECT_EQ(moment_sum_closed(n, alpha, p), moment_sum_direct(n, alpha, p)) << alpha << " " << n;
      }
    }
  }
}

TEST(MomentSums, PrintedP1IsRejected) {
  MomentPolyPair printed = moment_poly(1);
  const MultiPoly x = MultiPoly::variable(1, 0);
  const MultiPoly u = x * x - MultiPoly::constant(1, Rational(1));
  printed.p_alpha = u * u * x * x;
  bool any_mismatch = false;
  for (long n = 1; n <= 25; ++n) {
    any_mismatch = any_mismatch ||
                   moment_sum_closed(n, 1, Parity::Even, printed) != moment_sum_direct(n, 1, Parity::Even);
  }
  EXPECT_TRUE(any_mismatch);
}

TEST(PowerSums, KnownValues) {
  EXPECT_EQ(power_sum_parity(1, 5, Parity::Odd), Rational(9));
  EXPECT_EQ(power_sum_parity(2, 4, Parity::Even), Rational(20));
  EXPECT_EQ(power_sum_parity(3, 6, Parity::Even), Rational(288));
}

TEST(PowerSums, ClosedMatchesDirect) {
  for (long k = 0; k <= 8; ++k) {
    for (long n = 0; n <= 40; ++n) {
      EXPECT_EQ(power_sum(k, n), power_sum_parity_direct(k, n, Parity::Even) + power_sum_parity_direct(k, n, Parity::Odd));
      for (Parity p : {Parity::Even, Parity::Odd}) {
        EXPECT_EQ(power_sum_parity(k, n, p), power_sum_parity_direct(k, n, p)) << k << " " << n;
      }
    }
  }
}

TEST(CConstant, KnownValues) {
  EXPECT_EQ(c_constant(0), Rational(1, 2));
  EXPECT_EQ(c_constant(1), Rational(-1, 4));
  EXPECT_EQ(c_constant(3), Rational(1, 8));
  for (long k = 2; k <= 10; k += 2) EXPECT_EQ(c_constant(k), Rational(0)) << k;
}

TEST(Convolution, KnownValues) {
  const std::vector<long> ks{1, 1};
  EXPECT_EQ(conv_parity_sum(ks, 4, std::vector<Parity>{Parity::Odd, Parity::Odd}), Rational(6));
  EXPECT_EQ(conv_parity_sum(ks, 3, std::vector<Parity>{Parity::Odd, Parity::Odd}), Rational(0));
  EXPECT_EQ(conv_parity_sum(ks, 4, std::vector<Parity>{Parity::Even, Parity::Even}), Rational(4));
  EXPECT_THROW(conv_parity_sum(std::vector<long>{2, 1}, 4, std::vector<Parity>{Parity::Odd, Parity::Odd}),
               std::invalid_argument);
  EXPECT_THROW(conv_parity_sum(std::vector<long>{1}, 4, std::vector<Parity>{Parity::Odd}), std::invalid_argument);
}

TEST(Convolution, OddPolynomialWithParityFreeLeadingTerm) {
  for (long k1 : {1, 3, 5}) {
    for (long k2 : {1, 3, 5}) {
      const std::vector<long> ks{k1, k2};
      std::optional<Rational> leading;
      for (Parity a : {Parity::Even, Parity::Odd}) {
        for (Parity b : {Parity::Even, Parity::Odd}) {
          const ConvolutionFit fit = conv_parity_fit(ks, std::vector<Parity>{a, b});
          EXPECT_TRUE(fit.pass()) << k1 << " " << k2;
          EXPECT_EQ(fit.poly.total_degree(), k1 + k2 + 1);
          if (leading) EXPECT_EQ(*leading, fit.leading);
          leading = fit.leading;
        }
      }
    }
  }
}
