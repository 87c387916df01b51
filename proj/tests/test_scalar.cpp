#include <gtest/gtest.h>

#include <polypack/scalar.hpp>

using namespace polypack;

TEST(Rational, ArithmeticNormalizes) {
    Rational a(2, 4), b(-1, 3);
    EXPECT_EQ(a, Rational(1, 2));
    EXPECT_EQ(a + b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(-1, 6));
    EXPECT_EQ(a / b, Rational(-3, 2));
    EXPECT_EQ(Rational(3, -6).den(), 2);
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_LT(b, a);
}

TEST(Rational, OverflowThrows) {
    Rational big(INT64_MAX / 2);
    EXPECT_THROW(big * big, overflow_error);
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParseRoundTrip) {
    for (auto r : {Rational(7), Rational(-3, 8), Rational(0)}) EXPECT_EQ(Rational::parse(r.str()), r);
}

TEST(Quadratic, FieldArithmetic) {
    auto r2 = Quadratic::root(2);
    EXPECT_EQ(r2 * r2, Quadratic(2));
    auto x = Quadratic(1) + r2;
    EXPECT_EQ(x * x.conj(), Quadratic(-1));
    EXPECT_EQ((Quadratic(1) / x), r2 - Quadratic(1));
    EXPECT_TRUE((r2 * r2).is_rational());
    EXPECT_EQ((r2 * r2).m(), 0);
}

TEST(Quadratic, MixingRadicalsThrows) {
    EXPECT_THROW(Quadratic::root(2) + Quadratic::root(3), field_error);
    EXPECT_NO_THROW(Quadratic::root(3) + Quadratic(5));
}

TEST(Quadratic, SignIsExact) {
    auto r2 = Quadratic::root(2);
    EXPECT_EQ((Quadratic(Rational(141, 100)) - r2).sign(), -1);
    EXPECT_EQ((Quadratic(Rational(142, 100)) - r2).sign(), 1);
    EXPECT_EQ((Quadratic(3) - Quadratic(2) * r2).sign(), 1);  // 3 > 2.828
    EXPECT_TRUE(Quadratic(1) - r2 < Quadratic(0));
}

TEST(Quadratic, SquareRoots) {
    EXPECT_EQ(*Quadratic(9).sqrt(), Quadratic(3));
    EXPECT_EQ(*Quadratic(8).sqrt(), Quadratic(0, 2, 2));
    EXPECT_EQ(*Quadratic(Rational(1, 2)).sqrt(), Quadratic(0, Rational(1, 2), 2));
    auto phi = Quadratic(Rational(1, 2), Rational(1, 2), 5);
    auto phi2 = phi * phi;
    EXPECT_EQ(phi2, phi + Quadratic(1));
    EXPECT_EQ(*phi2.sqrt(), phi);
    EXPECT_FALSE(Quadratic(-1).sqrt());
    EXPECT_FALSE((Quadratic(1) + Quadratic::root(2)).sqrt());
    EXPECT_EQ(*(Quadratic(3) + Quadratic(0, 2, 2)).sqrt(), Quadratic(1) + Quadratic::root(2));
}

TEST(FloatMode, ToleranceDrivesEquality) {
    double saved = float_eps();
    EXPECT_TRUE(num::eq(1.0, 1.0 + 1e-12));
    float_eps() = 1e-15;
    EXPECT_FALSE(num::eq(1.0, 1.0 + 1e-12));
    float_eps() = saved;
}
