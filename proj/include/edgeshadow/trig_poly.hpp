#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "edgeshadow/ext_scalar.hpp"

namespace edgeshadow {

/// Elementary multiplier functions appearing in the shadow recursions.
enum class ElemFactor { Cos, Sin, CosSq, SinCos };

/// Endpoints at which exact evaluation is supported. All angles k*e/q with
/// q in {2, 3} land on the pi/6 lattice, whose sines and cosines lie in Q(sqrt 3).
enum class Endpoint { MinusPi, HalfPi, Pi };

/// e as a rational multiple of pi: -1, 1/2 or 1.
Rational endpoint_over_pi(Endpoint e);
double endpoint_value(Endpoint e);

/// Exact sin / cos of r*pi for rational r with denominator dividing 6.
/// Throws UnsupportedEndpoint off that lattice.
ExtScalar sin_exact_pi(const Rational& r);
ExtScalar cos_exact_pi(const Rational& r);

/// Finite trigonometric polynomial
///     sum_k  s_k sin(k phi / q) + c_k cos(k phi / q)
/// over a fixed frequency lattice 1/q (q = 2 for the crack, 3 for the notch),
/// with exact coefficients in Q(sqrt 3). Canonical form: no stored term with
/// s_k = c_k = 0, and the k = 0 entry has s_0 = 0 (sin 0 is identically zero).
class TrigPoly {
public:
    struct Term {
        ExtScalar sin_c;
        ExtScalar cos_c;
        bool is_zero() const { return sin_c.is_zero() && cos_c.is_zero(); }
        friend bool operator==(const Term&, const Term&) = default;
    };
    using TermMap = std::map<std::int64_t, Term>;

    explicit TrigPoly(int freq_den);

    int freq_den() const { return freq_den_; }
    bool empty() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Accumulates s*sin(k phi/q) + c*cos(k phi/q); keeps canonical form.
    /// k must be >= 0 (negative frequencies are the caller's job to fold).
    void add_term(std::int64_t k, const ExtScalar& s, const ExtScalar& c);

    const Term* term_at(std::int64_t k) const;
    std::int64_t max_freq_num() const;  // 0 for the empty polynomial

    friend bool operator==(const TrigPoly& p, const TrigPoly& r) {
        return p.freq_den_ == r.freq_den_ && p.terms_ == r.terms_;
    }

    static TrigPoly sin(int freq_den, std::int64_t k, ExtScalar coeff = ExtScalar(1));
    static TrigPoly cos(int freq_den, std::int64_t k, ExtScalar coeff = ExtScalar(1));

private:
    int freq_den_;
    TermMap terms_;
};

/// Termwise sum; throws FreqDenMismatch for polynomials on different lattices.
TrigPoly operator+(const TrigPoly& p, const TrigPoly& r);
TrigPoly operator-(const TrigPoly& p, const TrigPoly& r);
TrigPoly operator-(const TrigPoly& p);

/// Every coefficient multiplied by c.
TrigPoly scale(const TrigPoly& p, const ExtScalar& c);

/// Product with cos(phi), sin(phi), cos^2(phi) or sin(phi)cos(phi), expanded
/// by product-to-sum identities; negative frequencies fold with
/// sin(-x) = -sin(x), cos(-x) = cos(x). cos^2 and sin*cos are rewritten as
/// (1 + cos 2phi)/2 and (sin 2phi)/2 before convolution.
TrigPoly mul_factor(const TrigPoly& p, ElemFactor f);

/// d/dphi, termwise: sin(k phi/q) -> (k/q) cos(k phi/q), cos -> -(k/q) sin.
TrigPoly derivative(const TrigPoly& p);

/// Exact value at phi = -pi, pi/2 or pi.
ExtScalar eval_exact(const TrigPoly& p, Endpoint e);

/// Floating evaluation at arbitrary phi (radians).
double eval(const TrigPoly& p, double phi);

std::ostream& operator<<(std::ostream& os, const TrigPoly& p);

}  // namespace edgeshadow
