#include <gtest/gtest.h>

#include <unordered_set>

#include "sasano/errors.hpp"
#include "sasano/rational.hpp"

using sasano::Rational;

TEST(Rational, CanonicalForm) {
  Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse(" 5/ 10"), Rational(1, 2));
  EXPECT_THROW(Rational::parse("1/0"), sasano::ParseError);
  EXPECT_THROW(Rational::parse("abc"), sasano::ParseError);
  EXPECT_THROW(Rational::parse(""), sasano::ParseError);
}

TEST(Rational, Arithmetic) {
  Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_THROW(a / Rational(0), sasano::DomainError);
  EXPECT_THROW(Rational(0).inverse(), sasano::DomainError);
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
}

TEST(Rational, Parity) {
  EXPECT_TRUE(Rational(3).is_odd_integer());
  EXPECT_TRUE(Rational(-4).is_even_integer());
  EXPECT_FALSE(Rational(3, 2).is_odd_integer());
  EXPECT_FALSE(Rational(3, 2).is_even_integer());
  EXPECT_EQ(Rational(-3, 2).floor(), -2);
}

TEST(Rational, OrderingAndHash) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(3)};
  EXPECT_EQ(s.size(), 2u);
}
