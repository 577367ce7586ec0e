#include "fdist/rational.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <unordered_set>

using fdist::BigInt;
using fdist::Rational;

TEST(Rational, ParsesCanonicalStrings) {
    EXPECT_EQ(Rational::parse("3"), Rational(3));
    EXPECT_EQ(Rational::parse("-3/4"), Rational(-3, 4));
    EXPECT_EQ(Rational::parse("0"), Rational(0));
    EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(),
              "123456789012345678901234567890");
}

TEST(Rational, RejectsNonCanonicalText) {
    for (const char* bad : {"", "-", "/", "1/", "/2", "0.5", "1.0", "1e3", "+1", " 1", "1 ", "01",
                            "-0", "2/4", "3/1", "1/0", "0/1", "1/-2", "1//2", "a", "1/2/3", "00"}) {
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(Rational, ZeroDenominatorIsADomainError) {
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, CanonicalFormAfterConstruction) {
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Rational(0, -5).to_string(), "0");
    EXPECT_EQ(Rational(10, 5).to_string(), "2");
}

TEST(Rational, FloorRoundsTowardMinusInfinity) {
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-4).floor(), -4);
    EXPECT_EQ(fdist::mod_floor(BigInt(-7), 3), 2);
    EXPECT_EQ(fdist::mod_floor(BigInt(7), 3), 1);
}

TEST(Rational, OrderingAndHash) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(3)};
    EXPECT_EQ(s.size(), 2u);
}

// Property: parse(to_string(x)) == x and arithmetic stays canonical.
TEST(RationalProperty, RoundTripAndClosure) {
    fdist::testgen::Gen gen(11);
    for (int i = 0; i < 2000; ++i) {
        const Rational a = gen.rational(1000, 97);
        const Rational b = gen.rational(1000, 97);
        EXPECT_EQ(Rational::parse(a.to_string()), a);
        for (const Rational& r : {a + b, a - b, a * b}) {
            EXPECT_EQ(Rational::parse(r.to_string()), r);
        }
        if (!b.is_zero()) {
            EXPECT_EQ(a / b * b, a);
        }
        EXPECT_EQ(a + b - b, a);
        EXPECT_EQ((a < b), (b - a).sign() > 0);
    }
}
