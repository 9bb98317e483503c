#include <doctest.h>

#include <random>

#include "edgeshadow/rational.hpp"

using edgeshadow::DivisionByZero;
using edgeshadow::ParseError;
using edgeshadow::Rational;

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).den() == 1);
    CHECK(Rational(3, -9).num() == -1);
    CHECK(Rational(3, -9).den() == 3);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 4) + Rational(1, 12) == Rational(1, 3));
    CHECK(Rational(1, 2) * Rational(1, 6) == Rational(1, 12));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(3, 2) / Rational(3) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK(Rational(-5, 3).abs() == Rational(5, 3));
    CHECK(Rational(-5, 3).sign() == -1);
}

TEST_CASE("large denominators stay exact") {
    // 268435456 = 2^28 appears in the crack tables; products must not overflow.
    Rational big(-46189, 268435456L);
    CHECK((big * Rational(268435456L)).num() == -46189);
    Rational acc(0);
    for (int i = 0; i < 64; ++i) acc += Rational(1, 268435456L);
    CHECK(acc == Rational(64, 268435456L));
}

TEST_CASE("parse round-trips str") {
    for (const char* text : {"0", "1", "-1", "1/2", "-46189/268435456", "297542326681600"}) {
        Rational r = Rational::parse(text);
        CHECK(r.str() == text);
    }
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("+5/3") == Rational(5, 3));
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
}

TEST_CASE("to_double") {
    CHECK(Rational(1, 4).to_double() == 0.25);
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-15));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
    auto rnd = [&] { return Rational(num(rng), den(rng)); };
    for (int i = 0; i < 200; ++i) {
        Rational x = rnd(), y = rnd(), z = rnd();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x / x == Rational(1));
    }
}
