#include <gtest/gtest.h>

#include <sstream>

#include "polycount/counts.hpp"

using namespace polycount;

TEST(CountCache, WriteOnce) {
  CountCache cache;
  const CountKey key = make_key(Family::Q, 1, {4});
  cache.insert(key, Rational(4));
  EXPECT_EQ(cache.insert(key, Rational(4)), Rational(4));
  EXPECT_THROW(cache.insert(key, Rational(5)), ContractError);
  EXPECT_THROW(cache.insert(make_key(Family::Q, 1, {5}), Rational(1, 2)), ContractError);
  EXPECT_THROW(cache.insert(make_key(Family::Q, 1, {6}), Rational(-1)), ContractError);
  EXPECT_EQ(cache.lookup(key), Rational(4));
  EXPECT_FALSE(cache.lookup(make_key(Family::P, 1, {4})).has_value());
}

TEST(CountCache, SaveFormat) {
  CountCache cache;
  cache.insert(make_key(Family::Q, 1, {4}), Rational(4));
  cache.insert(make_key(Family::P, 0, {1, 2, 1}), Rational(32));
  std::ostringstream os;
  cache.save(os);
  EXPECT_EQ(os.str(), "P 0 3 2,1,1 32\nQ 1 1 4 4\n");
}

TEST(CountCache, RoundTripIsByteIdentical) {
  auto cache = std::make_shared<CountCache>();
  CountEngine engine(cache);
  for (long a = 0; a <= 5; ++a) {
    for (long b = 0; b <= 5; ++b) engine.n_count(1, {a, b});
  }
  std::ostringstream first;
  cache->save(first);

  CountCache reloaded;
  std::istringstream in(first.str());
  reloaded.load(in);
  std::ostringstream second;
  reloaded.save(second);
  EXPECT_EQ(first.str(), second.str());
  EXPECT_EQ(reloaded.size(), cache->size());
}

TEST(CountCache, RejectsMalformedLines) {
  for (const char* bad : {"Q 1 1 4", "Q 1 1 4 4 extra", "X 1 1 4 4", "q 1 1 4 4", "Q 1 2 4 4", "Q 0 3 1,2,3 6",
                          "Q 1 1 4, 4", "Q -1 1 4 4", "Q 1 1 a 4", "Q 1 1 4 1/2"}) {
    CountCache cache;
    std::istringstream in(bad);
    EXPECT_ANY_THROW(cache.load(in)) << bad;
    EXPECT_EQ(cache.size(), 0u) << bad;
  }
}

TEST(CountCache, LoadIsAllOrNothing) {
  CountCache cache;
  std::istringstream in("Q 1 1 4 4\nnonsense\n");
  EXPECT_THROW(cache.load(in), std::invalid_argument);
  EXPECT_EQ(cache.size(), 0u);
}
