#include <gtest/gtest.h>

#include "qxgcd/xgcd.hpp"
#include "random_util.hpp"

namespace qxgcd {
namespace {

void expect_xgcd2(const Int& a, const Int& b, const XgcdResult2& r) {
  EXPECT_GE(r.g, 0);
  EXPECT_EQ(r.u * a + r.v * b, r.g);
  EXPECT_TRUE(divides(r.g, a));
  EXPECT_TRUE(divides(r.g, b));
}

TEST(Xgcd2, Examples) {
  const XgcdResult2 r = xgcd2(12, 18);
  EXPECT_EQ(r.g, 6);
  expect_xgcd2(12, 18, r);

  const XgcdResult2 z = xgcd2(0, 5);
  EXPECT_EQ(z.g, 5);
  EXPECT_EQ(z.u, 0);
  EXPECT_EQ(z.v, 1);

  const XgcdResult2 c = xgcd2(240, 46);
  EXPECT_EQ(c.g, 2);
  expect_xgcd2(240, 46, c);
  // the classical scheme gives the textbook pair
  EXPECT_EQ(c.u, -9);
  EXPECT_EQ(c.v, 47);
}

TEST(Xgcd2, ZeroAndSigns) {
  const XgcdResult2 zz = xgcd2(0, 0);
  EXPECT_EQ(zz.g, 0);
  EXPECT_EQ(zz.u, 0);
  EXPECT_EQ(zz.v, 0);

  expect_xgcd2(-12, 18, xgcd2(-12, 18));
  expect_xgcd2(-12, -18, xgcd2(-12, -18));
  EXPECT_EQ(xgcd2(-7, 0).g, 7);
  expect_xgcd2(-7, 0, xgcd2(-7, 0));
}

TEST(Xgcd3, Examples) {
  const XgcdResult3 r = xgcd3(6, 10, 15);
  EXPECT_EQ(r.g, 1);
  EXPECT_EQ(r.u * 6 + r.v * 10 + r.w * 15, 1);
  EXPECT_EQ(xgcd3(0, 0, 7).g, 7);
  EXPECT_EQ(xgcd3(4, 6, 8).g, 2);
  EXPECT_EQ(xgcd3(0, 0, 0).g, 0);
}

TEST(Xgcd2, RandomLargeInputs) {
  test_util::Rng rng(7);
  const std::int64_t big = 1'000'000'000'000'000'000;
  for (int i = 0; i < 2000; ++i) {
    const Int a = rng.uniform(-big, big);
    const Int b = rng.uniform(-big, big);
    const XgcdResult2 r = xgcd2(a, b);
    expect_xgcd2(a, b, r);
    // every common divisor divides g
    for (int t : {2, 3, 5, 7, 11, 13}) {
      if (divides(t, a) && divides(t, b)) {
        EXPECT_TRUE(divides(t, r.g));
      }
    }
    // exercise the shared factor path
    const Int k = rng.uniform(1, 1000);
    const XgcdResult2 rk = xgcd2(a * k, b * k);
    expect_xgcd2(a * k, b * k, rk);
    EXPECT_TRUE(divides(k, rk.g));
  }
}

TEST(Xgcd3, RandomTriples) {
  test_util::Rng rng(8);
  for (int i = 0; i < 2000; ++i) {
    const Int a = rng.uniform(-1'000'000, 1'000'000);
    const Int b = rng.uniform(-1'000'000, 1'000'000);
    const Int c = rng.uniform(-1'000'000, 1'000'000);
    const XgcdResult3 r = xgcd3(a, b, c);
    EXPECT_EQ(r.u * a + r.v * b + r.w * c, r.g);
    EXPECT_GE(r.g, 0);
    EXPECT_TRUE(divides(r.g, a) && divides(r.g, b) && divides(r.g, c));
  }
}

}  // namespace
}  // namespace qxgcd
