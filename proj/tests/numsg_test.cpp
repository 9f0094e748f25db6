#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "maxcurves/numsg.hpp"
#include "oracles.hpp"

using maxcurves::numsg::NumericalSemigroup;
using maxcurves::numsg::OrderSequence;
namespace numsg = maxcurves::numsg;

using Ints = std::vector<std::int64_t>;

TEST(Semigroup, TwoThree) {
  const NumericalSemigroup s{2, 3};
  EXPECT_EQ(s.gaps(), Ints{1});
  EXPECT_EQ(s.genus(), 1);
  EXPECT_EQ(s.conductor(), 2);
  EXPECT_EQ(numsg::nongaps_upto(s, 1), Ints{0});
}

TEST(Semigroup, GkQbarTwo) {
  const NumericalSemigroup s{6, 8, 9};
  const Ints expect{1, 2, 3, 4, 5, 7, 10, 11, 13, 19};
  EXPECT_EQ(oracle::gaps_by_combinations({6, 8, 9}, 200), expect);
  EXPECT_EQ(s.gaps(), expect);
  EXPECT_EQ(s.genus(), 10);
  EXPECT_EQ(s.conductor(), 20);
}

TEST(Semigroup, GkQbarThree) {
  const NumericalSemigroup s{21, 27, 28};
  EXPECT_EQ(static_cast<std::int64_t>(oracle::gaps_by_combinations({21, 27, 28}, 2000).size()), 99);
  EXPECT_EQ(s.genus(), 99);
  EXPECT_EQ(numsg::apery_genus(s.generators()), 99);
  EXPECT_EQ(s.nongaps_upto(28), (Ints{0, 21, 27, 28}));
  EXPECT_GE(s.sieve_bound(), 2 * 28 * 28);
}

TEST(Semigroup, Contains) {
  const NumericalSemigroup s{5, 7, 8};
  EXPECT_TRUE(s.contains(5));
  EXPECT_FALSE(s.contains(6));
  EXPECT_TRUE(s.contains(0));
  EXPECT_FALSE(s.contains(-3));
  EXPECT_TRUE(s.contains(1000001));
  EXPECT_EQ(s.nongaps_upto(8), (Ints{0, 5, 7, 8}));
  EXPECT_EQ(s.gaps(), (Ints{1, 2, 3, 4, 6, 9, 11}));
}

TEST(Semigroup, MinimalGenerators) {
  EXPECT_EQ((NumericalSemigroup{3, 5, 6}.minimal_generators()), (std::vector<int>{3, 5}));
  EXPECT_EQ((NumericalSemigroup{5, 7, 8, 10, 12, 13}.minimal_generators()), (std::vector<int>{5, 7, 8}));
}

TEST(Semigroup, Errors) {
  EXPECT_THROW((NumericalSemigroup{4, 6}), std::invalid_argument);
  EXPECT_THROW(NumericalSemigroup(std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW((NumericalSemigroup{0, 1}), std::invalid_argument);
  EXPECT_THROW((void)numsg::nongaps_upto(NumericalSemigroup{2, 3}, -1), std::invalid_argument);
  EXPECT_NO_THROW((NumericalSemigroup{1}));
  EXPECT_EQ((NumericalSemigroup{1}.genus()), 0);
}

TEST(SemigroupProperty, SieveAgreesWithAperyOnRandomSets) {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<int> gen(2, 60), count(1, 5);
  int checked = 0;
  while (checked < 200) {
    std::vector<int> gens(static_cast<std::size_t>(count(rng)));
    for (auto& g : gens) g = gen(rng);
    if (std::accumulate(gens.begin(), gens.end(), 0, [](int a, int b) { return std::gcd(a, b); }) != 1) continue;
    const NumericalSemigroup s(gens);
    ASSERT_EQ(s.genus(), numsg::apery_genus(gens));
    ASSERT_EQ(s.frobenius_number(), numsg::apery_frobenius_number(gens));
    ++checked;
  }
}

TEST(SemigroupProperty, AddingGeneratorNeverAddsGaps) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> gen(2, 40);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> gens{gen(rng), gen(rng)};
    while (std::gcd(gens[0], gens[1]) != 1) gens[1] = gen(rng);
    const NumericalSemigroup base(gens);
    gens.push_back(gen(rng));
    EXPECT_LE(NumericalSemigroup(gens).genus(), base.genus());
  }
}

TEST(SemigroupProperty, ClosedUnderAddition) {
  const NumericalSemigroup s{21, 27, 28};
  const auto ng = s.nongaps_upto(400);
  for (auto a : ng)
    for (auto b : ng) ASSERT_TRUE(s.contains(a + b));
}

TEST(Orders, FrobeniusDimension) {
  EXPECT_EQ(numsg::frobenius_dimension_from_semigroup(NumericalSemigroup{5, 7, 8}, 7), 3);
  EXPECT_EQ(numsg::frobenius_dimension_from_semigroup(NumericalSemigroup{21, 27, 28}, 27), 3);
  EXPECT_EQ(numsg::frobenius_dimension_from_semigroup(NumericalSemigroup{4, 5}, 4), 2);
  EXPECT_THROW((void)numsg::frobenius_dimension_from_semigroup(NumericalSemigroup{5, 7, 8}, 5), std::domain_error);
}

TEST(Orders, RationalPlaceOrders) {
  EXPECT_EQ(numsg::rational_point_orders(NumericalSemigroup{21, 27, 28}, 27).orders(), (Ints{0, 1, 7, 28}));
  EXPECT_EQ(numsg::rational_point_orders(NumericalSemigroup{5, 7, 8}, 7).orders(), (Ints{0, 1, 3, 8}));
  EXPECT_EQ(numsg::rational_point_orders(NumericalSemigroup{3, 5}, 5).orders(), (Ints{0, 1, 3, 6}));
  EXPECT_EQ(numsg::rational_point_orders(NumericalSemigroup{4, 5}, 4).orders(), (Ints{0, 1, 5}));
  EXPECT_THROW((void)numsg::rational_point_orders(NumericalSemigroup{5, 7, 8}, 5), std::domain_error);
}

TEST(Orders, ShapeMatchesDimension) {
  // Every semigroup containing q and q+1 yields 0, 1, ..., q+1 of length r+1.
  for (int q = 2; q <= 30; ++q)
    for (int a = 2; a <= q + 1; ++a) {
      const NumericalSemigroup s{a, q, q + 1};
      const auto o = numsg::rational_point_orders(s, q);
      ASSERT_EQ(o[0], 0);
      ASSERT_EQ(o[1], 1);
      ASSERT_EQ(o.orders().back(), q + 1);
      ASSERT_EQ(static_cast<int>(o.size()), numsg::frobenius_dimension_from_semigroup(s, q) + 1);
    }
}

TEST(Orders, SequenceInvariants) {
  using numsg::OrderRole;
  EXPECT_THROW(OrderSequence({1, 2}, OrderRole::GenericEpsilon), std::invalid_argument);
  EXPECT_THROW(OrderSequence({0, 2, 3}, OrderRole::GenericEpsilon), std::invalid_argument);
  EXPECT_THROW(OrderSequence({0, 1, 1}, OrderRole::GenericEpsilon), std::invalid_argument);
  EXPECT_EQ(OrderSequence({0, 1, 3, 27}, OrderRole::GenericEpsilon).str(), "(0,1,3,27)");
}
