#include <gtest/gtest.h>

#include "ordlat/errors.hpp"
#include "ordlat/real.hpp"

using namespace ordlat;

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Rational, RoundingIsHalfUp) {
  EXPECT_EQ(round_half_up(Rational(1, 2)), 1);
  EXPECT_EQ(round_half_up(Rational(-1, 2)), 0);
  EXPECT_EQ(round_half_up(Rational(7, 2)), 4);
  EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil_of(Rational(-7, 2)), -3);
}

TEST(Rational, MatrixInverseAndDeterminant) {
  RatMatrix a = {{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  RatMatrix inv = inverse(a);
  EXPECT_EQ(inv[0][0], Rational(1));
  EXPECT_EQ(inv[0][1], Rational(-1));
  EXPECT_EQ(inv[1][1], Rational(2));
  EXPECT_EQ(determinant(a), Rational(1));
  RatMatrix sing = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  EXPECT_THROW(inverse(sing), RankDeficient);
  EXPECT_EQ(determinant(sing), Rational(0));
}

TEST(Real, ExactRootsStayExact) {
  Real r = Real::root(Rational(4), 2);
  ASSERT_TRUE(r.is_rational());
  EXPECT_EQ(r.rational(), Rational(2));
  Real s = Real::root(Rational(2), 2);
  EXPECT_FALSE(s.is_rational());
  EXPECT_EQ(compare(s * s, Real(2)), Cmp::Equal);
  EXPECT_NEAR(s.approx(), 1.41421356237, 1e-10);
}

TEST(Real, IntervalComparisonIsSound) {
  Real a = Real::root(Rational(2), 2);
  Real b = Real::root(Rational(3), 2);
  EXPECT_EQ(compare(a, b), Cmp::Less);
  EXPECT_EQ(compare(b, a), Cmp::Greater);
  EXPECT_TRUE(certainly_le(a, Real(Rational(142, 100))));
  EXPECT_FALSE(certainly_le(a, Real(Rational(141, 100))));
  EXPECT_EQ(compare(max(a, b), b), Cmp::Equal);
}

TEST(Real, PowersOfRoots) {
  Real g = Real::root(Rational(64, 3), 6);
  Real g6 = g.pow(6);
  ASSERT_TRUE(g6.is_rational());
  EXPECT_EQ(g6.rational(), Rational(64, 3));
  Real half = Real(Rational(16)).pow(1, 2);
  ASSERT_TRUE(half.is_rational());
  EXPECT_EQ(half.rational(), Rational(4));
}
