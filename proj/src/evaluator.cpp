#include "edgeshadow/evaluator.hpp"

#include <cmath>
#include <quadmath.h>

namespace edgeshadow {

namespace {

using Quad = __float128;

inline Quad q_sin(Quad x) { return sinq(x); }
inline Quad q_cos(Quad x) { return cosq(x); }
inline Quad q_pow(Quad x, Quad y) { return powq(x, y); }
inline double q_sin(double x) { return std::sin(x); }
inline double q_cos(double x) { return std::cos(x); }
inline double q_pow(double x, double y) { return std::pow(x, y); }
inline Quad to_quad(const Rational& r) {
    // exact decimal -> binary conversion; corpus integers exceed 53 bits
    return strtoflt128(r.num().get_str().c_str(), nullptr) / strtoflt128(r.den().get_str().c_str(), nullptr);
}

template <class Real>
Real scalar_of(const ExtScalar& x);

template <>
double scalar_of<double>(const ExtScalar& x) {
    return to_double(x);
}

template <>
Quad scalar_of<Quad>(const ExtScalar& x) {
    const Quad sqrt3 = sqrtq(Quad(3));
    return to_quad(x.a) + to_quad(x.b) * sqrt3;
}

template <class Real>
struct NumericSeries {
    struct Term {
        std::int64_t k;
        Real s, c;
    };
    struct Part {
        Real theta_factor;  // (-mode^2)^(h/2)
        Real exponent;      // alpha + h + f
        std::vector<Term> terms;
    };
    int q = 2;
    int mode = 0;
    Real R{};
    std::vector<Part> parts;

    Real operator()(Real rho, Real phi, Real theta) const {
        Real a_theta = mode == 0 ? Real(1) : q_cos(Real(mode) * theta);
        Real acc(0);
        for (const Part& part : parts) {
            Real angular(0);
            for (const auto& t : part.terms) {
                Real arg = Real(t.k) * phi / Real(q);
                angular += t.s * q_sin(arg) + t.c * q_cos(arg);
            }
            acc += part.theta_factor * a_theta * q_pow(rho, part.exponent) * angular;
        }
        return acc;
    }
};

template <class Real>
NumericSeries<Real> prepare_series(const SeriesSpec& spec, const ShadowTable& table) {
    if (spec.R <= 0) throw DomainError("R must be positive");
    if (spec.K < 0) throw DomainError("K must be nonnegative");
    if (spec.mode < 0) throw DomainError("mode must be nonnegative");
    NumericSeries<Real> series;
    series.q = spec.geometry.freq_den();
    series.mode = spec.mode;
    series.R = Real(spec.R);
    Rational alpha = spec.geometry.eigenvalue(spec.j);
    if (spec.kind == Kind::Dual) alpha = -alpha;
    for (int h = 0; h <= spec.K; h += 2)
        for (int f = 0; h + f <= spec.K; ++f) {
            const TrigPoly& poly = table.at({spec.kind, h, spec.j, f});
            typename NumericSeries<Real>::Part part;
            Real minus_n2 = -Real(spec.mode) * Real(spec.mode);
            part.theta_factor = Real(1);
            for (int i = 0; i < h / 2; ++i) part.theta_factor *= minus_n2;
            // rho^(alpha + h + f) / R^(h+f)
            part.theta_factor /= q_pow(series.R, Real(h + f));
            if constexpr (std::is_same_v<Real, Quad>)
                part.exponent = to_quad(alpha) + Real(h + f);
            else
                part.exponent = alpha.to_double() + h + f;
            for (const auto& [k, t] : poly.terms())
                part.terms.push_back({k, scalar_of<Real>(t.sin_c), scalar_of<Real>(t.cos_c)});
            series.parts.push_back(std::move(part));
        }
    return series;
}

void check_point(const SeriesSpec& spec, const EdgePoint& p) {
    if (!(p.rho >= 0) || !(p.rho < spec.R)) throw DomainError("rho outside [0, R)");
    const Geometry& g = spec.geometry;
    if (!(p.phi >= g.phi1_value() - 1e-12) || !(p.phi <= g.phi2_value() + 1e-12))
        throw DomainError("phi outside the wedge");
    if (!std::isfinite(p.theta)) throw DomainError("theta not finite");
}

}  // namespace

double eval_tau(const SeriesSpec& spec, const ShadowTable& table, const EdgePoint& p) {
    check_point(spec, p);
    if (p.rho == 0.0) {
        Rational alpha = spec.geometry.eigenvalue(spec.j);
        if (spec.kind == Kind::Dual) throw DomainError("dual series is singular at rho = 0");
        if (alpha.sign() > 0) return 0.0;
    }
    auto series = prepare_series<double>(spec, table);
    return series(p.rho, p.phi, p.theta);
}

double laplacian_fd(const std::function<double(EdgePoint)>& u, const EdgePoint& p, FdSteps steps, double R,
                    const Geometry& g) {
    if (!(p.rho > 2 * steps.drho)) throw DomainError("point too close to the edge for the stencil");
    if (!(p.phi > g.phi1_value() + 2 * steps.dphi) || !(p.phi < g.phi2_value() - 2 * steps.dphi))
        throw DomainError("point too close to a face for the stencil");
    auto field = [&](double rho, double phi, double theta) { return u(EdgePoint{rho, phi, theta}); };
    return laplacian_fd_t<double>(field, p.rho, p.phi, p.theta, steps.drho, steps.dphi, steps.dtheta, R);
}

SlopeReport residual_slope(const SeriesSpec& spec, const ShadowTable& table, double rho_min, double rho_max,
                           int samples) {
    if (!(rho_min > 0) || !(rho_min < rho_max)) throw DomainError("need 0 < rho_min < rho_max");
    if (rho_max > spec.R / 10) throw DomainError("rho_max must stay within R/10");
    if (samples < 8) throw DomainError("need at least 8 samples");

    auto series = prepare_series<Quad>(spec, table);
    const Quad R = spec.R;
    const double phi1 = spec.geometry.phi1_value(), phi2 = spec.geometry.phi2_value();
    const double omega = phi2 - phi1;
    const double phi_probes[] = {phi1 + 0.15 * omega, phi1 + 0.4 * omega, phi1 + 0.65 * omega, phi1 + 0.9 * omega};
    const double theta_probes[] = {0.37, 1.03};

    // FD steps balancing truncation against quad roundoff: drho ~ rho eps^(1/4).
    const Quad c_rho = 2e-8;
    const Quad dphi = 3e-9;
    const Quad dtheta = 1e-6;

    SlopeReport report;
    Rational alpha = spec.geometry.eigenvalue(spec.j);
    if (spec.kind == Kind::Dual) alpha = -alpha;
    report.expected = alpha.to_double() + spec.K - 1;

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? 0.0 : static_cast<double>(i) / (samples - 1);
        double rho = rho_min * std::pow(rho_max / rho_min, t);
        Quad qrho = rho;
        Quad best = 0;
        for (double phi : phi_probes)
            for (double theta : theta_probes) {
                Quad delta = laplacian_fd_t<Quad>(series, qrho, Quad(phi), Quad(theta), c_rho * qrho, dphi,
                                                  dtheta, R);
                Quad mag = fabsq(delta);
                if (mag > best) best = mag;
            }
        double value = static_cast<double>(best);
        if (!(value > 0) || !std::isfinite(value)) throw DomainError("degenerate residual sample");
        report.samples.emplace_back(rho, value);
        double x = std::log(rho), y = std::log(value);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = samples;
    double denom = n * sxx - sx * sx;
    report.slope = (n * sxy - sx * sy) / denom;
    report.intercept = (sy - report.slope * sx) / n;
    return report;
}

}  // namespace edgeshadow
