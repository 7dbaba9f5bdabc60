#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "hoagent/rational.hpp"

namespace hoagent {
namespace {

TEST(Rational, NormalizesSignAndLowestTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_EQ(Rational(0, -7).denominator(), 1);
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("10"), Rational(10));
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("+4/2"), Rational(2));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, ArithmeticIsExact) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(4) / Rational(3) - Rational(2), Rational(-2, 3));
  EXPECT_EQ(abs(Rational(-2, 3)), Rational(2, 3));
  EXPECT_LT(Rational(2, 3), Rational(4, 3));
  EXPECT_EQ(Rational(7, 2).to_string(), "7/2");
  EXPECT_EQ(Rational(-5).to_string(), "-5");
}

TEST(Rational, OverflowIsReportedNotWrapped) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big * big, std::overflow_error);
  EXPECT_THROW(big + big, std::overflow_error);
}

// Field laws on random small fractions: the ordering agrees with
// cross-multiplication and a/b*b recovers a.
TEST(Rational, FieldLawsOnRandomValues) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000), den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (b != Rational(0)) {
      EXPECT_EQ(a / b * b, a);
    }
    const bool less = a.numerator() * b.denominator() < b.numerator() * a.denominator();
    EXPECT_EQ(a < b, less);
    EXPECT_EQ(Rational::parse(a.to_string()), a);
  }
}

}  // namespace
}  // namespace hoagent
