#include "edgeshadow/trig_poly.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace edgeshadow {

Rational endpoint_over_pi(Endpoint e) {
    switch (e) {
        case Endpoint::MinusPi: return Rational(-1);
        case Endpoint::HalfPi: return Rational(1, 2);
        case Endpoint::Pi: return Rational(1);
    }
    throw Error("invalid endpoint");
}

double endpoint_value(Endpoint e) {
    return endpoint_over_pi(e).to_double() * M_PI;
}

namespace {

// sin(n pi/6) for n = 0..11.
const ExtScalar kSinTable[12] = {
    ExtScalar(0),
    ExtScalar(Rational(1, 2)),
    ExtScalar(Rational(0), Rational(1, 2)),   // sqrt(3)/2
    ExtScalar(1),
    ExtScalar(Rational(0), Rational(1, 2)),
    ExtScalar(Rational(1, 2)),
    ExtScalar(0),
    ExtScalar(Rational(-1, 2)),
    ExtScalar(Rational(0), Rational(-1, 2)),
    ExtScalar(-1),
    ExtScalar(Rational(0), Rational(-1, 2)),
    ExtScalar(Rational(-1, 2)),
};

// n with r = n/6, or throws if r is off the pi/6 lattice.
long sixths(const Rational& r) {
    Rational n6 = r * Rational(6);
    if (!n6.is_integer()) throw UnsupportedEndpoint("angle " + r.str() + "*pi is not a multiple of pi/6");
    if (!n6.num().fits_slong_p()) throw UnsupportedEndpoint("angle multiple too large");
    return n6.num().get_si();
}

long mod12(long n) {
    long m = n % 12;
    return m < 0 ? m + 12 : m;
}

}  // namespace

ExtScalar sin_exact_pi(const Rational& r) { return kSinTable[mod12(sixths(r))]; }

ExtScalar cos_exact_pi(const Rational& r) { return kSinTable[mod12(sixths(r) + 3)]; }

TrigPoly::TrigPoly(int freq_den) : freq_den_(freq_den) {
    if (freq_den <= 0) throw Error("freq_den must be positive");
}

void TrigPoly::add_term(std::int64_t k, const ExtScalar& s, const ExtScalar& c) {
    if (k < 0) throw Error("negative frequency numerator");
    if (k == 0 && !s.is_zero()) throw Error("sin coefficient at frequency 0");
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        Term t{s, c};
        if (!t.is_zero()) terms_.emplace(k, std::move(t));
        return;
    }
    it->second.sin_c += s;
    it->second.cos_c += c;
    if (it->second.is_zero()) terms_.erase(it);
}

const TrigPoly::Term* TrigPoly::term_at(std::int64_t k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? nullptr : &it->second;
}

std::int64_t TrigPoly::max_freq_num() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

TrigPoly TrigPoly::sin(int freq_den, std::int64_t k, ExtScalar coeff) {
    TrigPoly p(freq_den);
    p.add_term(k, coeff, ExtScalar(0));
    return p;
}

TrigPoly TrigPoly::cos(int freq_den, std::int64_t k, ExtScalar coeff) {
    TrigPoly p(freq_den);
    p.add_term(k, ExtScalar(0), coeff);
    return p;
}

TrigPoly operator+(const TrigPoly& p, const TrigPoly& r) {
    if (p.freq_den() != r.freq_den()) throw FreqDenMismatch(p.freq_den(), r.freq_den());
    TrigPoly out = p;
    for (const auto& [k, t] : r.terms()) out.add_term(k, t.sin_c, t.cos_c);
    return out;
}

TrigPoly operator-(const TrigPoly& p, const TrigPoly& r) { return p + (-r); }

TrigPoly operator-(const TrigPoly& p) { return scale(p, ExtScalar(-1)); }

TrigPoly scale(const TrigPoly& p, const ExtScalar& c) {
    TrigPoly out(p.freq_den());
    if (c.is_zero()) return out;
    for (const auto& [k, t] : p.terms()) out.add_term(k, t.sin_c * c, t.cos_c * c);
    return out;
}

namespace {

// p * cos(m phi / q), m >= 0 on the same lattice.
TrigPoly mul_cos(const TrigPoly& p, std::int64_t m) {
    TrigPoly out(p.freq_den());
    const ExtScalar half(Rational(1, 2));
    for (const auto& [k, t] : p.terms()) {
        // sin(k)cos(m) = (sin(k+m) + sin(k-m))/2 ; cos(k)cos(m) = (cos(k+m) + cos(k-m))/2
        ExtScalar hs = t.sin_c * half;
        ExtScalar hc = t.cos_c * half;
        out.add_term(k + m, hs, hc);
        std::int64_t d = k - m;
        if (d >= 0) {
            out.add_term(d, d == 0 ? ExtScalar(0) : hs, hc);
        } else {
            out.add_term(-d, -hs, hc);  // sin(-x) = -sin(x), cos(-x) = cos(x)
        }
    }
    return out;
}

// p * sin(m phi / q), m >= 0 on the same lattice.
TrigPoly mul_sin(const TrigPoly& p, std::int64_t m) {
    TrigPoly out(p.freq_den());
    const ExtScalar half(Rational(1, 2));
    for (const auto& [k, t] : p.terms()) {
        // sin(k)sin(m) = (cos(k-m) - cos(k+m))/2 ; cos(k)sin(m) = (sin(k+m) - sin(k-m))/2
        ExtScalar hs = t.sin_c * half;
        ExtScalar hc = t.cos_c * half;
        out.add_term(k + m, hc, -hs);
        std::int64_t d = k - m;
        if (d >= 0) {
            out.add_term(d, d == 0 ? ExtScalar(0) : -hc, hs);
        } else {
            out.add_term(-d, hc, hs);  // cos(d) = cos(-d), -sin(d) = sin(-d)
        }
    }
    return out;
}

}  // namespace

TrigPoly mul_factor(const TrigPoly& p, ElemFactor f) {
    const std::int64_t q = p.freq_den();
    const ExtScalar half(Rational(1, 2));
    switch (f) {
        case ElemFactor::Cos: return mul_cos(p, q);
        case ElemFactor::Sin: return mul_sin(p, q);
        case ElemFactor::CosSq: return scale(p + mul_cos(p, 2 * q), half);
        case ElemFactor::SinCos: return scale(mul_sin(p, 2 * q), half);
    }
    throw Error("invalid factor");
}

TrigPoly derivative(const TrigPoly& p) {
    TrigPoly out(p.freq_den());
    for (const auto& [k, t] : p.terms()) {
        if (k == 0) continue;
        ExtScalar rate((Rational(static_cast<long>(k), p.freq_den())));
        out.add_term(k, -(t.cos_c * rate), t.sin_c * rate);
    }
    return out;
}

ExtScalar eval_exact(const TrigPoly& p, Endpoint e) {
    const Rational epi = endpoint_over_pi(e);
    ExtScalar acc(0);
    for (const auto& [k, t] : p.terms()) {
        Rational angle = epi * Rational(static_cast<long>(k), p.freq_den());
        acc += t.sin_c * sin_exact_pi(angle) + t.cos_c * cos_exact_pi(angle);
    }
    return acc;
}

double eval(const TrigPoly& p, double phi) {
    double acc = 0.0;
    for (const auto& [k, t] : p.terms()) {
        double arg = static_cast<double>(k) * phi / p.freq_den();
        acc += to_double(t.sin_c) * std::sin(arg) + to_double(t.cos_c) * std::cos(arg);
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const TrigPoly& p) {
    if (p.empty()) return os << "0";
    bool first = true;
    for (const auto& [k, t] : p.terms()) {
        for (int part = 0; part < 2; ++part) {
            const ExtScalar& c = part == 0 ? t.sin_c : t.cos_c;
            if (c.is_zero()) continue;
            if (!first) os << " ; ";
            first = false;
            os << c.str() << (part == 0 ? " sin " : " cos ") << k << "/" << p.freq_den();
        }
    }
    return os;
}

}  // namespace edgeshadow
