#include <gtest/gtest.h>

#include "qxgcd/engine.hpp"
#include "qxgcd/oracle.hpp"
#include "random_util.hpp"

namespace qxgcd {
namespace {

TEST(Hnf2Col, Examples) {
  EXPECT_EQ(oracle::hnf_2col({{2, 3}, {-6, 2}}), (IdealBasis{22, 8, 1}));
  EXPECT_EQ(oracle::hnf_2col({{1, 0}, {0, 1}}), (IdealBasis{1, 0, 1}));
  EXPECT_EQ(oracle::hnf_2col({{10, -5}, {-70, 10}}), (IdealBasis{50, 40, 5}));
}

TEST(Hnf2Col, RankDeficient) {
  EXPECT_THROW(oracle::hnf_2col({{1, 0}, {3, 0}}), RankDeficient);
  EXPECT_THROW(oracle::hnf_2col({{1, 2}, {2, 4}}), RankDeficient);
  EXPECT_THROW(oracle::hnf_2col({{0, 0}}), RankDeficient);
}

TEST(IdealRows, MatchRingMultiplication) {
  const RingSpec r = make_ring(-19);
  const QInt x{-70, 93}, y{-45, 103};
  const auto rows = oracle::ideal_rows(r, x, y);
  ASSERT_EQ(rows.size(), 4u);
  const QInt xt = mul(r, x, {0, 1});
  EXPECT_EQ(rows[1].first, xt.x0);
  EXPECT_EQ(rows[1].second, xt.x1);
}

TEST(BruteGcd, Examples) {
  const RingSpec m2 = make_ring(-2);
  EXPECT_TRUE(is_associate(m2, oracle::brute_gcd(m2, {4, 6}, {-4, 5}, 10),
                           {2, 3}));
  EXPECT_TRUE(is_unit(m2, oracle::brute_gcd(m2, {2, 0}, {3, 0}, 5)));

  const RingSpec m19 = make_ring(-19);
  EXPECT_TRUE(is_associate(
      m19, oracle::brute_gcd(m19, {-70, 93}, {-45, 103}, 120), {5, 2}));
}

TEST(BruteGcd, RejectsRealRing) {
  EXPECT_THROW(oracle::brute_gcd(make_ring(13), {1, 0}, {1, 0}, 5),
               InvalidRing);
}

TEST(BruteUnitRep, Examples) {
  const auto a = oracle::brute_unit_rep({22, 16, 3}, 10);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(*a, (SolutionPair{-1, 3}));

  // (-1, 1) and (1, -1) tie; the lexicographic order picks (-1, 1)
  const auto b = oracle::brute_unit_rep({10, 16, 5}, 5);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(*b, (SolutionPair{-1, 1}));
  EXPECT_EQ(evaluate({10, 16, 5}, b->m, b->n), -1);

  EXPECT_FALSE(oracle::brute_unit_rep({2, 0, 2}, 50).has_value());
}

TEST(BruteGcd, AgreesWithEngine) {
  test_util::Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    const RingSpec r = make_ring(rng.pick(test_util::imaginary_pid_rings()));
    const QInt w = rng.nonzero_element(4);
    const QInt x = mul(r, w, rng.nonzero_element(4));
    const QInt y = mul(r, w, rng.nonzero_element(4));
    const Int bound = 2 * isqrt(abs(norm(r, x))) + 2;
    const QInt brute = oracle::brute_gcd(r, x, y, bound);
    EXPECT_TRUE(is_associate(r, brute, quadratic_xgcd(r, x, y).g));
    EXPECT_TRUE(divides(r, w, brute));
  }
}

}  // namespace
}  // namespace qxgcd
