#pragma once

#include <iosfwd>
#include <string>

#include "edgeshadow/rational.hpp"

namespace edgeshadow {

/// Element of Q(sqrt 3): a + b*sqrt(3) with exact rational a, b.
/// Every radical is rationalized on construction (1/sqrt(3) lives as b = 1/3),
/// so equality is plain structural equality of (a, b).
struct ExtScalar {
    Rational a;  // rational part
    Rational b;  // coefficient of sqrt(3)

    ExtScalar() = default;
    ExtScalar(Rational ra) : a(std::move(ra)) {}  // NOLINT: Q embeds in Q(sqrt 3)
    ExtScalar(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}
    ExtScalar(long n) : a(n) {}  // NOLINT

    static ExtScalar sqrt3() { return ExtScalar(Rational(0), Rational(1)); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return b.is_zero(); }

    friend ExtScalar operator+(const ExtScalar& x, const ExtScalar& y) { return {x.a + y.a, x.b + y.b}; }
    friend ExtScalar operator-(const ExtScalar& x, const ExtScalar& y) { return {x.a - y.a, x.b - y.b}; }
    ExtScalar operator-() const { return {-a, -b}; }
    friend ExtScalar operator*(const ExtScalar& x, const ExtScalar& y) {
        return {x.a * y.a + Rational(3) * (x.b * y.b), x.a * y.b + x.b * y.a};
    }
    friend ExtScalar operator/(const ExtScalar& x, const ExtScalar& y);

    ExtScalar& operator+=(const ExtScalar& y) { a += y.a; b += y.b; return *this; }
    ExtScalar& operator-=(const ExtScalar& y) { a -= y.a; b -= y.b; return *this; }
    ExtScalar& operator*=(const ExtScalar& y) { *this = *this * y; return *this; }

    friend bool operator==(const ExtScalar& x, const ExtScalar& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const ExtScalar& x, const ExtScalar& y) { return !(x == y); }

    /// Textual form used by the DSL and JSON: "a" when b = 0, else "a+b r3"
    /// spelled as e.g. "0+1/3r3" / "1/2-5/4r3".
    std::string str() const;
};

/// Multiplicative inverse; throws DivisionByZero when x = 0. Nonzero elements
/// are always invertible: a^2 - 3 b^2 = 0 with a, b rational forces a = b = 0.
ExtScalar inverse(const ExtScalar& x);

double to_double(const ExtScalar& x);

std::ostream& operator<<(std::ostream& os, const ExtScalar& x);

}  // namespace edgeshadow
