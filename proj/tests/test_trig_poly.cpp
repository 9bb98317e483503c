#include <doctest.h>

#include <cmath>
#include <random>

#include "edgeshadow/trig_poly.hpp"

using namespace edgeshadow;

namespace {

ExtScalar rat(long n, long d = 1) { return ExtScalar(Rational(n, d)); }

TrigPoly random_poly(std::mt19937& rng, int q, int max_k = 9) {
    std::uniform_int_distribution<long> num(-8, 8), den(1, 6);
    std::uniform_int_distribution<int> nterms(0, 4), freq(0, max_k);
    TrigPoly p(q);
    for (int i = nterms(rng); i > 0; --i) {
        std::int64_t k = freq(rng);
        ExtScalar s = k == 0 ? ExtScalar(0) : ExtScalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        ExtScalar c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        p.add_term(k, s, c);
    }
    return p;
}

double factor_value(ElemFactor f, double phi) {
    switch (f) {
        case ElemFactor::Cos: return std::cos(phi);
        case ElemFactor::Sin: return std::sin(phi);
        case ElemFactor::CosSq: return std::cos(phi) * std::cos(phi);
        case ElemFactor::SinCos: return std::sin(phi) * std::cos(phi);
    }
    return 0;
}

}  // namespace

TEST_CASE("add cancels and merges") {
    TrigPoly a = TrigPoly::sin(2, 1);
    CHECK((a + scale(a, rat(-1))).empty());
    TrigPoly b = TrigPoly::sin(2, 1, rat(1, 4)) + TrigPoly::sin(2, 1, rat(1, 12));
    CHECK(b == TrigPoly::sin(2, 1, rat(1, 3)));
    CHECK_THROWS_AS(TrigPoly::sin(2, 1) + TrigPoly::sin(3, 1), FreqDenMismatch);
}

TEST_CASE("notch eigenfunction storage") {
    // sin(2 phi/3) + (1/sqrt 3) cos(2 phi/3) lives at k = 2 with coefficients (1, (0,1/3))
    TrigPoly p(3);
    p.add_term(2, rat(1), ExtScalar(Rational(0), Rational(1, 3)));
    auto* t = p.term_at(2);
    REQUIRE(t != nullptr);
    CHECK(t->sin_c == rat(1));
    CHECK(t->cos_c == ExtScalar(Rational(0), Rational(1, 3)));
}

TEST_CASE("scale") {
    CHECK(scale(TrigPoly::sin(2, 3), rat(0)).empty());
    CHECK(scale(TrigPoly::sin(2, 3), rat(-1, 4)) == TrigPoly::sin(2, 3, rat(-1, 4)));
    CHECK(scale(TrigPoly::sin(3, 2), ExtScalar::sqrt3()) == TrigPoly::sin(3, 2, ExtScalar::sqrt3()));
}

TEST_CASE("product-to-sum identities") {
    // cos(phi) sin(phi/2) = sin(3phi/2)/2 - sin(phi/2)/2
    TrigPoly a = mul_factor(TrigPoly::sin(2, 1), ElemFactor::Cos);
    CHECK(a == TrigPoly::sin(2, 3, rat(1, 2)) + TrigPoly::sin(2, 1, rat(-1, 2)));
    // sin(phi) cos(phi/2) = sin(3phi/2)/2 + sin(phi/2)/2
    TrigPoly b = mul_factor(TrigPoly::cos(2, 1), ElemFactor::Sin);
    CHECK(b == TrigPoly::sin(2, 3, rat(1, 2)) + TrigPoly::sin(2, 1, rat(1, 2)));
    // cos^2(phi) sin(phi/2) = sin(phi/2)/2 + sin(5phi/2)/4 - sin(3phi/2)/4
    TrigPoly c = mul_factor(TrigPoly::sin(2, 1), ElemFactor::CosSq);
    CHECK(c == TrigPoly::sin(2, 1, rat(1, 2)) + TrigPoly::sin(2, 5, rat(1, 4)) + TrigPoly::sin(2, 3, rat(-1, 4)));
}

TEST_CASE("derivative") {
    CHECK(derivative(TrigPoly::sin(2, 1)) == TrigPoly::cos(2, 1, rat(1, 2)));
    CHECK(derivative(derivative(TrigPoly::sin(2, 3))) == TrigPoly::sin(2, 3, rat(-9, 4)));
    // d/dphi [sin(2phi/3) + (1/sqrt3) cos(2phi/3)] = (2/3)cos(2phi/3) - (2/(3 sqrt3)) sin(2phi/3)
    TrigPoly p(3);
    p.add_term(2, rat(1), ExtScalar(Rational(0), Rational(1, 3)));
    TrigPoly d = derivative(p);
    auto* t = d.term_at(2);
    REQUIRE(t != nullptr);
    CHECK(t->cos_c == rat(2, 3));
    CHECK(t->sin_c == ExtScalar(Rational(0), Rational(-2, 9)));  // -(2/3)(1/3) sqrt3 = -2/(3 sqrt3)
    double phi = 0.3;
    double expect = (2.0 / 3) * std::cos(2 * phi / 3) - 2.0 / (3 * std::sqrt(3.0)) * std::sin(2 * phi / 3);
    CHECK(eval(d, phi) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(derivative(TrigPoly::cos(2, 0)).empty());
}

TEST_CASE("exact endpoint evaluation") {
    CHECK(eval_exact(TrigPoly::sin(2, 1), Endpoint::Pi) == rat(1));
    CHECK(eval_exact(TrigPoly::cos(3, 2), Endpoint::MinusPi) == rat(-1, 2));
    // derivative of the notch eigenfunction vanishes at phi = pi/2
    TrigPoly p(3);
    p.add_term(2, rat(1), ExtScalar(Rational(0), Rational(1, 3)));
    CHECK(eval_exact(derivative(p), Endpoint::HalfPi).is_zero());
    // off-lattice frequency
    TrigPoly q(5);
    q.add_term(1, rat(1), rat(0));
    CHECK_THROWS_AS(eval_exact(q, Endpoint::Pi), UnsupportedEndpoint);
}

TEST_CASE("floating evaluation") {
    CHECK(eval(TrigPoly::sin(2, 1), M_PI / 3) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(eval(TrigPoly::sin(2, 1, rat(1, 4)), M_PI) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(eval(TrigPoly(2), 1.234) == 0.0);
}

TEST_CASE("exact and floating evaluation agree at endpoints") {
    std::mt19937 rng(3);
    // the pi/2 face belongs to the notch lattice (q=3); on q=2 odd frequencies
    // land off the pi/6 grid there
    for (int q : {2, 3})
        for (int i = 0; i < 40; ++i) {
            TrigPoly p = random_poly(rng, q);
            for (Endpoint e : {Endpoint::MinusPi, Endpoint::Pi})
                CHECK(std::abs(eval(p, endpoint_value(e)) - to_double(eval_exact(p, e))) < 1e-12);
            if (q == 3)
                CHECK(std::abs(eval(p, endpoint_value(Endpoint::HalfPi)) -
                               to_double(eval_exact(p, Endpoint::HalfPi))) < 1e-12);
        }
}

TEST_CASE("mul_factor equals pointwise product numerically") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> angle(-3.2, 3.2);
    for (int q : {2, 3})
        for (ElemFactor f : {ElemFactor::Cos, ElemFactor::Sin, ElemFactor::CosSq, ElemFactor::SinCos})
            for (int i = 0; i < 8; ++i) {
                TrigPoly p = random_poly(rng, q);
                TrigPoly prod = mul_factor(p, f);
                for (int s = 0; s < 32; ++s) {
                    double phi = angle(rng);
                    CHECK(std::abs(eval(prod, phi) - factor_value(f, phi) * eval(p, phi)) < 1e-10);
                }
            }
}

TEST_CASE("derivative matches central differences") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    const double step = 1e-5;
    for (int q : {2, 3})
        for (int i = 0; i < 20; ++i) {
            TrigPoly p = random_poly(rng, q);
            TrigPoly d = derivative(p);
            for (int s = 0; s < 8; ++s) {
                double phi = angle(rng);
                double fd = (eval(p, phi + step) - eval(p, phi - step)) / (2 * step);
                CHECK(std::abs(eval(d, phi) - fd) < 1e-6);
            }
        }
}

TEST_CASE("canonical form invariants") {
    std::mt19937 rng(13);
    for (int i = 0; i < 60; ++i) {
        TrigPoly p = random_poly(rng, 2), r = random_poly(rng, 2);
        for (const TrigPoly* poly : {&p, &r}) {
            for (const auto& [k, t] : poly->terms()) {
                CHECK(k >= 0);
                CHECK(!t.is_zero());
                if (k == 0) CHECK(t.sin_c.is_zero());
            }
        }
        // operations preserve canonical form and never emit negative frequencies
        for (const TrigPoly& out : {p + r, scale(p, ExtScalar(Rational(-2, 3))), derivative(p),
                                    mul_factor(p, ElemFactor::SinCos), mul_factor(r, ElemFactor::CosSq)}) {
            for (const auto& [k, t] : out.terms()) {
                CHECK(k >= 0);
                CHECK(!t.is_zero());
            }
        }
        // equal canonical maps <=> equality
        TrigPoly sum1 = p + r, sum2 = r + p;
        CHECK(sum1 == sum2);
    }
}
