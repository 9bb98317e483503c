#include "edgeshadow/geometry.hpp"

namespace edgeshadow {

std::string to_string(GeometryName g) {
    return g == GeometryName::Crack ? "crack" : "vnotch90";
}

Geometry Geometry::crack() { return Geometry(GeometryName::Crack, 2, Endpoint::MinusPi, Endpoint::Pi); }

Geometry Geometry::vnotch90() { return Geometry(GeometryName::VNotch90, 3, Endpoint::MinusPi, Endpoint::HalfPi); }

Geometry Geometry::of(GeometryName name) {
    return name == GeometryName::Crack ? crack() : vnotch90();
}

std::optional<Geometry> Geometry::from_name(std::string_view name) {
    if (name == "crack") return crack();
    if (name == "vnotch90") return vnotch90();
    return std::nullopt;
}

Rational Geometry::eigenvalue(int j) const {
    if (j < 1) throw DomainError("eigenvalue index must be >= 1");
    return Rational(j) / omega_over_pi();
}

std::int64_t Geometry::eigen_freq_num(int j) const {
    Rational k = eigenvalue(j) * Rational(freq_den_);
    if (!k.is_integer()) throw Error("eigenvalue off the frequency lattice");
    return k.num().get_si();
}

TrigPoly Geometry::eigenfunction(int j) const {
    // cos(alpha (phi - phi1)) = cos(alpha phi1) cos(alpha phi) + sin(alpha phi1) sin(alpha phi)
    Rational alpha_phi1 = eigenvalue(j) * endpoint_over_pi(phi1_);
    ExtScalar a = sin_exact_pi(alpha_phi1);  // sin coefficient
    ExtScalar b = cos_exact_pi(alpha_phi1);  // cos coefficient
    ExtScalar unit = inverse(a.is_zero() ? b : a);
    TrigPoly y(freq_den_);
    y.add_term(eigen_freq_num(j), a * unit, b * unit);
    return y;
}

bool Geometry::is_neumann_eigen(const Rational& lambda) const {
    if (lambda.sign() < 0) return false;
    return (lambda * omega_over_pi()).is_integer();
}

}  // namespace edgeshadow
