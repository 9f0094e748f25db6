#include <gtest/gtest.h>

#include "maxcurves/verify.hpp"

namespace verify = maxcurves::verify;
namespace curves = maxcurves::curves;
using verify::Coverage;
using Ints = std::vector<std::int64_t>;

TEST(Castelnuovo, Examples) {
  const auto b = verify::castelnuovo_bound(11, 4);
  EXPECT_EQ(b.raw_str(), "360/24");
  EXPECT_EQ(b.str(), "15");
  EXPECT_TRUE(b.is_integer());
  EXPECT_EQ(verify::castelnuovo_bound(7, 3).str(), "9");
  EXPECT_EQ(verify::castelnuovo_bound(27, 3).str(), "169");
  EXPECT_EQ(verify::castelnuovo_bound(27, 4).raw_str(), "2600/24");
  EXPECT_THROW((void)verify::castelnuovo_bound(7, 1), std::invalid_argument);
}

TEST(Castelnuovo, MonotoneInRAndHermitianAtTwo) {
  for (std::int64_t q = 2; q <= 64; ++q) {
    // r = 2 reproduces the Hermitian genus exactly.
    EXPECT_EQ(verify::castelnuovo_bound(q, 2), (verify::Rational{q * (q - 1), 2})) << q;
    for (std::int64_t r = 2; r < std::min<std::int64_t>(q, 10); ++r)
      EXPECT_FALSE(verify::castelnuovo_bound(q, r) < verify::castelnuovo_bound(q, r + 1)) << q << " " << r;
  }
}

TEST(DeduceDimension, Examples) {
  EXPECT_EQ(verify::deduce_frobenius_dimension(27, 99), (std::set<int>{3, 4}));
  EXPECT_EQ(verify::deduce_frobenius_dimension(8, 10), (std::set<int>{3}));
  EXPECT_EQ(verify::deduce_frobenius_dimension(7, 7), (std::set<int>{3}));
  EXPECT_EQ(verify::deduce_frobenius_dimension(5, 4), (std::set<int>{3}));
  EXPECT_EQ(verify::deduce_frobenius_dimension(11, 19), (std::set<int>{3}));
  EXPECT_EQ(verify::deduce_frobenius_dimension(17, 46), (std::set<int>{3}));
  EXPECT_EQ(verify::deduce_frobenius_dimension(7, 21), (std::set<int>{2}));
  EXPECT_TRUE(verify::deduce_frobenius_dimension(7, 22).empty());
  EXPECT_THROW((void)verify::deduce_frobenius_dimension(7, -1), std::invalid_argument);
}

TEST(DeduceDimension, EveryCandidateAdmitsTheGenus) {
  for (std::int64_t q = 2; q <= 30; ++q)
    for (std::int64_t g = 0; 2 * g <= q * (q - 1); ++g)
      for (int r : verify::deduce_frobenius_dimension(q, g)) {
        ASSERT_TRUE(verify::castelnuovo_bound(q, r).at_least(g));
        ASSERT_LE(r, q + 1);
      }
}

TEST(Padic, Examples) {
  EXPECT_FALSE(verify::padic_admissible(Ints{0, 1, 3, 7}, 7));
  EXPECT_TRUE(verify::padic_admissible(Ints{0, 1, 2, 7}, 7));
  EXPECT_TRUE(verify::padic_admissible(Ints{0, 1, 3, 27}, 3));
  EXPECT_TRUE(verify::padic_admissible(Ints{0, 1, 2, 8}, 2));
  EXPECT_FALSE(verify::padic_admissible(Ints{0, 1, 3, 5}, 5));
  EXPECT_THROW((void)verify::padic_admissible(Ints{0, 2, 1}, 5), std::invalid_argument);
}

TEST(AllowedJ2, Values) {
  EXPECT_EQ(verify::allowed_j2_values(7), (std::set<std::int64_t>{2, 3, 4}));
  EXPECT_EQ(verify::allowed_j2_values(8), (std::set<std::int64_t>{2, 3, 5}));
  EXPECT_EQ(verify::allowed_j2_values(5), (std::set<std::int64_t>{2, 3}));
  EXPECT_TRUE(verify::validate_j2(3, 7));
  EXPECT_FALSE(verify::validate_j2(5, 7));
}

TEST(Epsilon, Examples) {
  EXPECT_EQ(verify::deduce_epsilon_sequence(Ints{7, 3}, 27, 3, Coverage::AllClasses).epsilon.orders(),
            (Ints{0, 1, 3, 27}));
  EXPECT_EQ(verify::deduce_epsilon_sequence(Ints{3, 2}, 8, 2, Coverage::AllClasses).epsilon.orders(),
            (Ints{0, 1, 2, 8}));
  const auto gsx = verify::deduce_epsilon_sequence(Ints{3}, 7, 7, Coverage::Partial);
  EXPECT_EQ(gsx.epsilon.orders(), (Ints{0, 1, 2, 7}));
  ASSERT_EQ(gsx.rejected.size(), 1u);
  EXPECT_EQ(gsx.rejected.front().first, 3);
  EXPECT_NE(gsx.rejected.front().second.find("p-adic"), std::string::npos);
  for (std::int64_t q : {5, 11, 17})
    EXPECT_EQ(verify::deduce_epsilon_sequence(Ints{3}, q, q, Coverage::Partial).epsilon.orders(),
              (Ints{0, 1, 2, q}));
}

TEST(Epsilon, Errors) {
  EXPECT_THROW((void)verify::deduce_epsilon_sequence(Ints{}, 7, 7, Coverage::Partial), std::domain_error);
  EXPECT_THROW((void)verify::deduce_epsilon_sequence(Ints{3}, 7, 7, Coverage::AllClasses), std::domain_error);
  EXPECT_THROW((void)verify::deduce_epsilon_sequence(Ints{3}, 7, 7, Coverage::Partial, 4), std::domain_error);
  // p = 3 with min j_2 = 3 leaves both 2 and 3 open.
  EXPECT_THROW((void)verify::deduce_epsilon_sequence(Ints{3}, 27, 3, Coverage::Partial), std::domain_error);
  EXPECT_THROW((void)verify::deduce_epsilon_sequence(Ints{4, 9}, 27, 3, Coverage::AllClasses), std::domain_error);
}

TEST(Epsilon, ArgminStableUnderLargerObservations) {
  struct Case {
    Ints j2;
    std::int64_t q, p;
    Coverage cov;
  };
  const std::vector<Case> cases{{{7, 3}, 27, 3, Coverage::AllClasses},
                                {{3, 2}, 8, 2, Coverage::AllClasses},
                                {{3}, 7, 7, Coverage::Partial},
                                {{3}, 11, 11, Coverage::Partial},
                                {{2}, 25, 5, Coverage::AllClasses}};
  for (const auto& c : cases) {
    const auto base = verify::deduce_epsilon_sequence(c.j2, c.q, c.p, c.cov);
    const std::int64_t m = *std::min_element(c.j2.begin(), c.j2.end());
    for (std::int64_t extra = m; extra <= c.q + 1; ++extra) {
      Ints more = c.j2;
      more.push_back(extra);
      more.push_back(extra + 1);
      const auto again = verify::deduce_epsilon_sequence(more, c.q, c.p, c.cov);
      ASSERT_EQ(again.epsilon, base.epsilon);
      ASSERT_EQ(again.min_j2, base.min_j2);
    }
  }
}

TEST(Maximal, NegativeControls) {
  const auto census = curves::count_gsx49_places();
  EXPECT_TRUE(verify::check_maximal(census, 7, 7).passed);
  for (auto cls : curves::kPlaceClasses)
    for (std::int64_t delta : {-1, 1}) {
      auto bad = census;
      bad.add(cls, delta);
      const auto r = verify::check_maximal(bad, 7, 7);
      EXPECT_FALSE(r.passed);
      EXPECT_EQ(r.witness["delta"], delta);
    }
}

TEST(Report, GkQbarTwo) {
  const auto rep = verify::theorem_report(curves::make_gk(2));
  EXPECT_TRUE(rep.passing());
  EXPECT_EQ(rep.census.total(), 225);
  ASSERT_TRUE(rep.epsilon);
  EXPECT_EQ(rep.epsilon->epsilon.orders(), (Ints{0, 1, 2, 8}));
}

TEST(Report, GkQbarThree) {
  const auto rep = verify::theorem_report(curves::make_gk(3));
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_EQ(rep.genus, 99);
  ASSERT_EQ(rep.place_orders.size(), 2u);
  EXPECT_EQ(rep.place_orders[0].orders.orders(), (Ints{0, 1, 7, 28}));
  EXPECT_EQ(rep.place_orders[1].orders.orders(), (Ints{0, 1, 3, 28}));
  EXPECT_EQ(rep.epsilon->epsilon.orders(), (Ints{0, 1, 3, 27}));
  EXPECT_EQ(rep.dimension_candidates, (std::set<int>{3, 4}));
  EXPECT_EQ(rep.frobenius_dimension, 3);
}

TEST(Report, Gsx49) {
  const auto rep = verify::theorem_report(curves::make_gsx49());
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  const auto* w = rep.find_check("monomial_nongaps");
  ASSERT_NE(w, nullptr);
  for (const char* v : {"5", "10", "12", "13"}) {
    const std::int64_t i = w->witness[v]["i"], j = w->witness[v]["j"];
    EXPECT_GE(3 * i, 8 * j) << v;
    EXPECT_EQ(7 * i - 16 * j, std::stoll(v));
  }
  EXPECT_EQ(rep.epsilon->epsilon.orders(), (Ints{0, 1, 2, 7}));
}

TEST(Report, Fk) {
  for (std::int64_t q : {5, 11, 17}) {
    const auto rep = verify::theorem_report(curves::make_fk(q));
    for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << q << " " << c.name << ": " << c.detail;
    EXPECT_EQ(rep.find_check("pole_order_x_over_y_minus_beta")->witness["pole_order"], q - 2);
    EXPECT_EQ(rep.epsilon->epsilon.orders(), (Ints{0, 1, 2, q}));
  }
}

TEST(Report, InjectedDeltaFails) {
  const auto rep = verify::theorem_report(curves::make_gsx49(), {1});
  EXPECT_FALSE(rep.passing());
  EXPECT_FALSE(rep.find_check("maximal")->passed);
}

TEST(Report, GkQbarFourStopsAtEpsilon) {
  // Census and semigroup checks hold, but eps_2 = 4 is outside {2, 3}.
  const auto rep = verify::theorem_report(curves::make_gk(4));
  EXPECT_TRUE(rep.find_check("maximal")->passed);
  EXPECT_TRUE(rep.find_check("ramified_semigroup_gap_count")->passed);
  EXPECT_NE(rep.find_check("stage:epsilon"), nullptr);
  EXPECT_FALSE(rep.passing());
}
