#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "edgeshadow/trig_poly.hpp"

namespace edgeshadow {

enum class GeometryName { Crack, VNotch90 };

std::string to_string(GeometryName g);

/// Wedge configuration around the circular edge: face angles phi1 < phi2,
/// opening omega = phi2 - phi1, and the frequency lattice denominator q that
/// carries the whole eigenfunction/shadow family.
class Geometry {
public:
    /// Penny-shaped crack: phi in [-pi, pi], omega = 2 pi, q = 2.
    static Geometry crack();
    /// 90 degree V-notch: phi in [-pi, pi/2], omega = 3 pi / 2, q = 3.
    static Geometry vnotch90();
    static Geometry of(GeometryName name);
    /// CLI names "crack" / "vnotch90".
    static std::optional<Geometry> from_name(std::string_view name);

    GeometryName name() const { return name_; }
    int freq_den() const { return freq_den_; }
    Endpoint phi1() const { return phi1_; }
    Endpoint phi2() const { return phi2_; }
    double phi1_value() const { return endpoint_value(phi1_); }
    double phi2_value() const { return endpoint_value(phi2_); }
    /// omega / pi (2 for crack, 3/2 for notch).
    Rational omega_over_pi() const { return endpoint_over_pi(phi2_) - endpoint_over_pi(phi1_); }

    /// alpha_j = j pi / omega: j/2 for the crack, 2j/3 for the notch.
    Rational eigenvalue(int j) const;
    /// alpha_j as a frequency numerator over q.
    std::int64_t eigen_freq_num(int j) const;

    /// Neumann eigenfunction proportional to cos(alpha_j (phi - phi1)),
    /// rewritten as A sin(alpha_j phi) + B cos(alpha_j phi) and normalized to
    /// A = 1 when A != 0, else B = 1. Every j >= 1 is supported; the
    /// reference tables cover only the odd-j (sine) crack families.
    TrigPoly eigenfunction(int j) const;

    /// True iff lambda = n pi / omega for some integer n >= 0, i.e. lambda is
    /// a Neumann eigenvalue of the wedge (the boundary closure degenerates).
    bool is_neumann_eigen(const Rational& lambda) const;

    friend bool operator==(const Geometry&, const Geometry&) = default;

private:
    Geometry(GeometryName name, int freq_den, Endpoint phi1, Endpoint phi2)
        : name_(name), freq_den_(freq_den), phi1_(phi1), phi2_(phi2) {}

    GeometryName name_;
    int freq_den_;
    Endpoint phi1_;
    Endpoint phi2_;
};

}  // namespace edgeshadow
