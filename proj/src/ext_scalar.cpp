#include "edgeshadow/ext_scalar.hpp"

#include <cmath>
#include <ostream>

namespace edgeshadow {

ExtScalar inverse(const ExtScalar& x) {
    if (x.is_zero()) throw DivisionByZero();
    Rational norm = x.a * x.a - Rational(3) * (x.b * x.b);
    return {x.a / norm, -x.b / norm};
}

ExtScalar operator/(const ExtScalar& x, const ExtScalar& y) { return x * inverse(y); }

double to_double(const ExtScalar& x) {
    constexpr double kSqrt3 = 1.7320508075688772935;
    return x.a.to_double() + x.b.to_double() * kSqrt3;
}

std::string ExtScalar::str() const {
    if (b.is_zero()) return a.str();
    std::string out = a.str();
    out += (b.sign() < 0) ? '-' : '+';
    out += b.abs().str();
    out += "r3";
    return out;
}

std::ostream& operator<<(std::ostream& os, const ExtScalar& x) { return os << x.str(); }

}  // namespace edgeshadow
