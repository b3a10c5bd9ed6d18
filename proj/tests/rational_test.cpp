#include <gtest/gtest.h>

#include <sstream>

#include "riparian/rational.hpp"

namespace riparian {
namespace {

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-3/4"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("4.17"), Rational(417, 100));
  EXPECT_EQ(Rational::parse("1.5e-3"), Rational(3, 2000));
  EXPECT_EQ(Rational::parse("  0.50 "), Rational(1, 2));
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("2E2"), Rational(200));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1//2", "1.2.3", "3/", "/3", "e5", "1e", "--1"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, KeepsLowestTerms) {
  const Rational r(10, -4);
  EXPECT_EQ(r.to_string(), "-5/2");
  EXPECT_EQ(r.numerator_string(), "-5");
  EXPECT_EQ(r.denominator_string(), "2");
  EXPECT_FALSE(r.is_integer());
  EXPECT_TRUE(Rational(8, 4).is_integer());
  EXPECT_EQ(Rational(8, 4).to_string(), "2");
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 3);
  const Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  EXPECT_THROW(a / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_LE(Rational(2, 4), Rational(1, 2));
  EXPECT_NE(Rational(1, 3), Rational(333, 1000));
}

TEST(Rational, FloorAndAbs) {
  EXPECT_EQ(floor(Rational(7, 2)), Rational(3));
  EXPECT_EQ(floor(Rational(-7, 2)), Rational(-4));
  EXPECT_EQ(floor(Rational(4)), Rational(4));
  EXPECT_EQ(abs(Rational(-7, 2)), Rational(7, 2));
}

TEST(Rational, ConvertsAndStreams) {
  EXPECT_DOUBLE_EQ(Rational(1, 4).to_double(), 0.25);
  std::ostringstream os;
  os << Rational(935, 464);
  EXPECT_EQ(os.str(), "935/464");
}

TEST(Rational, ExactWhereDoublesDrift) {
  Rational total(0);
  for (int i = 0; i < 10; ++i) total += Rational::parse("0.1");
  EXPECT_EQ(total, Rational(1));
}

}  // namespace
}  // namespace riparian
