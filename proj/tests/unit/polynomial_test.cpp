#include <gtest/gtest.h>

#include <random>

#include "polycount/polynomial.hpp"

using namespace polycount;

namespace {

MultiPoly q11_odd() {
  MultiPoly p(1);
  p.add_term({3}, Rational(1, 24));
  p.add_term({1}, Rational(-1, 24));
  return p;
}

}  // namespace

TEST(MultiPoly, EvalKnownValues) {
  const MultiPoly p = MultiPoly::monomial({1, 1, 1}, Rational(2));
  EXPECT_EQ(p.eval(std::vector<Rational>{1, 1, 1}), Rational(2));
  EXPECT_EQ(q11_odd().eval(std::vector<Rational>{3}), Rational(1));
  MultiPoly c(2);
  c.add_term({0, 0}, Rational(7, 3));
  c.add_term({2, 1}, Rational(5));
  EXPECT_EQ(c.eval(std::vector<Rational>{0, 0}), Rational(7, 3));
  EXPECT_THROW(c.eval(std::vector<Rational>{1}), std::invalid_argument);
}

TEST(MultiPoly, CoefficientKnownValues) {
  MultiPoly even(1);
  even.add_term({3}, Rational(1, 24));
  even.add_term({1}, Rational(8, 24));
  EXPECT_EQ(even.coefficient({3}), Rational(1, 24));
  EXPECT_EQ(MultiPoly::monomial({1, 1, 1}, Rational(2)).coefficient({1, 1, 1}), Rational(2));
  EXPECT_EQ(even.coefficient({2}), Rational(0));
  EXPECT_THROW(even.coefficient({1, 1}), std::invalid_argument);
}

TEST(MultiPoly, NoZeroTermsStored) {
  MultiPoly p(1);
  p.add_term({2}, Rational(3));
  p.add_term({2}, Rational(-3));
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.total_degree(), -1);
  EXPECT_TRUE((q11_odd() - q11_odd()).is_zero());
}

TEST(MultiPoly, Oddness) {
  EXPECT_TRUE(is_odd_each_variable(q11_odd()));
  EXPECT_FALSE(is_odd_each_variable(MultiPoly::monomial({2}, Rational(1))));
  EXPECT_TRUE(is_odd_each_variable(MultiPoly(3)));
  EXPECT_FALSE(is_odd_each_variable(MultiPoly::monomial({1, 2}, Rational(1))));
}

TEST(MultiPoly, DegreeIsAdditive) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 4);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    MultiPoly a(3), b(3);
    for (int t = 0; t < 4; ++t) {
      a.add_term({e(rng), e(rng), e(rng)}, Rational(c(rng)));
      b.add_term({e(rng), e(rng), e(rng)}, Rational(c(rng)));
    }
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ((a * b).total_degree(), a.total_degree() + b.total_degree());
  }
}

TEST(MultiPoly, TextForm) {
  EXPECT_EQ(q11_odd().to_string(), "1/24*x1^3 - 1/24*x1");
  EXPECT_EQ(MultiPoly(2).to_string(), "0");
}

TEST(MultiPoly, JsonForm) {
  EXPECT_EQ(to_json(q11_odd()),
            R"({"terms":[{"coeff":"-1/24","exps":[1]},{"coeff":"1/24","exps":[3]}],"vars":1})");
}

TEST(Interpolate, RecoversCube) {
  Tensor t{{4}, {}};
  std::vector<Rational> nodes;
  for (long x : {1, 3, 5, 7}) {
    nodes.emplace_back(x);
    t.values.emplace_back(x * x * x);
  }
  EXPECT_EQ(interpolate({nodes}, t), MultiPoly::monomial({3}, Rational(1)));
}

TEST(Interpolate, UnderfitFailsValidation) {
  // Two odd samples of Q_{1,1} fix a line that misses the value at 5.
  const MultiPoly fit = interpolate({{Rational(1), Rational(3)}}, Tensor{{2}, {Rational(0), Rational(1)}});
  EXPECT_EQ(fit.total_degree(), 1);
  EXPECT_NE(fit.eval(std::vector<Rational>{5}), Rational(5));
}

TEST(Interpolate, Bilinear) {
  Tensor t{{3, 3}, {}};
  std::vector<Rational> nodes{1, 2, 4};
  for (long a : {1, 2, 4}) {
    for (long b : {1, 2, 4}) t.values.emplace_back(a * b);
  }
  EXPECT_EQ(interpolate({nodes, nodes}, t), MultiPoly::monomial({1, 1}, Rational(1)));
}

TEST(Interpolate, RoundTripRandom) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    MultiPoly src(2);
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; j <= 2; ++j) src.add_term({i, j}, Rational(c(rng), 1 + trial));
    }
    std::vector<std::vector<Rational>> grid{{-1, 0, 2, 5}, {1, 3, 4}};
    Tensor t{{4, 3}, {}};
    for (const auto& x : grid[0]) {
      for (const auto& y : grid[1]) t.values.push_back(src.eval(std::vector<Rational>{x, y}));
    }
    EXPECT_EQ(interpolate(grid, t), src);
  }
}

TEST(Interpolate, RejectsBadInput) {
  EXPECT_THROW(interpolate({{Rational(1), Rational(1)}}, Tensor{{2}, {Rational(0), Rational(1)}}),
               std::invalid_argument);
  EXPECT_THROW(interpolate({{Rational(1), Rational(2)}}, Tensor{{3}, {Rational(0), Rational(1), Rational(2)}}),
               std::invalid_argument);
}

TEST(Univariate, DivideAndShift) {
  const MultiPoly lin = MultiPoly::univariate(std::vector<Rational>{-3, 2});
  const MultiPoly q = MultiPoly::univariate(std::vector<Rational>{1, 1, 1});
  EXPECT_EQ(divide_exact(lin * q, lin), q);
  EXPECT_THROW(divide_exact(q, lin), ContractError);
  const MultiPoly shifted = shift_univariate(MultiPoly::monomial({2}, Rational(1)), Rational(-1));
  EXPECT_EQ(shifted, MultiPoly::univariate(std::vector<Rational>{1, -2, 1}));
}

TEST(Parity, Classification) {
  EXPECT_EQ(classify(0), ParityClass::Zero);
  EXPECT_EQ(classify(3), ParityClass::Odd);
  EXPECT_EQ(classify(4), ParityClass::EvenPositive);
  EXPECT_THROW(classify(-1), std::invalid_argument);
  EXPECT_EQ(all_signatures(3).size(), 27u);
}

TEST(QuasiPoly, EvalSelectsPiece) {
  QuasiPoly q(2);
  q.set_piece({ParityClass::Odd, ParityClass::Zero}, MultiPoly::monomial({1}, Rational(2)));
  q.set_piece({ParityClass::Odd, ParityClass::Odd}, MultiPoly::monomial({1, 1}, Rational(1)));
  EXPECT_EQ(q.eval(std::vector<long>{3, 0}), Rational(6));
  EXPECT_EQ(q.eval(std::vector<long>{3, 5}), Rational(15));
  EXPECT_THROW(q.set_piece({ParityClass::Odd, ParityClass::Zero}, MultiPoly(2)), std::invalid_argument);
  EXPECT_NE(to_json(q).find(R"("parity":["odd","zero"])"), std::string::npos);
}
