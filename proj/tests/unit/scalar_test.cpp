#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "qvoa/scalar.hpp"

namespace qvoa {
namespace {

const Scalar r = Scalar::r();

TEST(Scalar, MultiplyVariable) { EXPECT_EQ(r * r, Scalar::monomial(Rational(1), 2)); }

TEST(Scalar, AddConstants) {
  EXPECT_EQ(Scalar(make_rational(1, 2)) + r + Scalar(make_rational(1, 2)), Scalar(1) + r);
}

TEST(Scalar, KacFactorVanishes) {
  const Scalar factor = Scalar(make_rational(1, 2)) * (Scalar(5) * r + Scalar(22));
  EXPECT_EQ(factor.specialize(make_rational(-22, 5)), 0);
  EXPECT_NE(factor.specialize(Rational(1)), 0);
}

TEST(Scalar, Specialize) {
  EXPECT_EQ((Scalar(make_rational(1, 2)) * r).specialize(Rational(2)), 1);
  EXPECT_EQ((r * r).specialize(Rational(-1)), 1);
  const int m = 2;
  const Scalar central = Scalar(make_rational(m * m * m - m, 12)) * r;
  EXPECT_EQ(central.specialize(Rational(1)), make_rational(1, 2));
}

TEST(Scalar, RenderingIsExact) {
  EXPECT_EQ((Scalar(make_rational(1, 2)) * r * r + Scalar(3)).to_string(), "1/2*r^2 + 3");
  EXPECT_EQ((Scalar(2) * r).to_string(), "2*r");
  EXPECT_EQ(Scalar(make_rational(-22, 5)).to_string(), "-22/5");
  EXPECT_EQ(Scalar().to_string(), "0");
  EXPECT_EQ((r - Scalar(1)).to_string(), "r - 1");
}

TEST(Scalar, ParseRational) {
  EXPECT_EQ(parse_rational("-22/5"), make_rational(-22, 5));
  EXPECT_EQ(parse_rational("4/2"), Rational(2));
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Scalar, NoTrailingZeros) {
  const Scalar a = r * r + r;
  const Scalar b = a - r * r;
  EXPECT_EQ(b.degree(), 1);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Scalar, RingAxiomsOnRandomSamples) {
  std::mt19937 rng(7);
  for (int k = 0; k < 300; ++k) {
    const Scalar a = oracle::random_scalar(rng, 3);
    const Scalar b = oracle::random_scalar(rng, 3);
    const Scalar c = oracle::random_scalar(rng, 3);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Scalar());
    ASSERT_EQ(a * Scalar(1), a);
  }
}

TEST(Scalar, SpecializeIsRingHomomorphism) {
  std::mt19937 rng(11);
  for (int k = 0; k < 300; ++k) {
    const Scalar a = oracle::random_scalar(rng, 3);
    const Scalar b = oracle::random_scalar(rng, 3);
    const Rational x = oracle::random_rational(rng);
    ASSERT_EQ((a + b).specialize(x), a.specialize(x) + b.specialize(x));
    ASSERT_EQ((a * b).specialize(x), a.specialize(x) * b.specialize(x));
  }
}

TEST(Scalar, DivisionIdentity) {
  std::mt19937 rng(13);
  for (int k = 0; k < 200; ++k) {
    const Scalar a = oracle::random_scalar(rng, 4);
    Scalar b = oracle::random_scalar(rng, 2);
    if (b.is_zero()) b = Scalar(1);
    const PolyDivision q = divide(a, b);
    ASSERT_EQ(q.quotient * b + q.remainder, a);
    ASSERT_TRUE(q.remainder.is_zero() || q.remainder.degree() < b.degree());
    ASSERT_EQ(exact_quotient(a * b, b), a);
  }
}

TEST(Scalar, GcdIsMonicCommonFactor) {
  const Scalar f = r + Scalar(2);
  const Scalar g = Scalar(3) * (r - Scalar(1));
  const Scalar h = Scalar(5) * r * r;
  EXPECT_EQ(gcd(f * g, f * h), f);
  EXPECT_EQ(gcd(g, h), Scalar(1));
  EXPECT_THROW(divide(r, Scalar()), std::domain_error);
}

}  // namespace
}  // namespace qvoa
