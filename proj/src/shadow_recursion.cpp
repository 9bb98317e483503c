#include "edgeshadow/shadow_recursion.hpp"

#include <sstream>

namespace edgeshadow {

std::string to_string(Kind k) { return k == Kind::Primal ? "primal" : "dual"; }

std::string to_string(const ShadowKey& key) {
    std::ostringstream os;
    os << to_string(key.kind) << "(h=" << key.h << ", j=" << key.j << ", f=" << key.f << ")";
    return os.str();
}

const TrigPoly* ShadowTable::find(const ShadowKey& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

const TrigPoly& ShadowTable::at(const ShadowKey& key) const {
    const TrigPoly* p = find(key);
    if (!p) throw MissingDependency(to_string(key));
    return *p;
}

const SolveLogEntry* ShadowTable::log(const ShadowKey& key) const {
    auto it = log_.find(key);
    return it == log_.end() ? nullptr : &it->second;
}

void ShadowTable::insert(const ShadowKey& key, TrigPoly poly, SolveLogEntry log) {
    entries_.insert_or_assign(key, std::move(poly));
    log_.insert_or_assign(key, log);
}

namespace {

Rational signed_alpha(const Geometry& g, const ShadowKey& key) {
    Rational alpha = g.eigenvalue(key.j);
    return key.kind == Kind::Primal ? alpha : -alpha;
}

void check_key(const ShadowKey& key) {
    if (key.h < 0 || key.h % 2 != 0) throw DomainError("h must be even and nonnegative");
    if (key.f < 0) throw DomainError("f must be nonnegative");
    if (key.j < 1) throw DomainError("j must be >= 1");
}

}  // namespace

Rational shadow_exponent(const Geometry& g, const ShadowKey& key) {
    check_key(key);
    return signed_alpha(g, key) + Rational(key.h + key.f);
}

TrigPoly build_rhs(const ShadowKey& key, const ShadowTable& table) {
    check_key(key);
    const Geometry& g = table.geometry();
    const Rational alpha = signed_alpha(g, key);
    TrigPoly rhs(g.freq_den());

    if (key.h == 0) {
        if (key.f == 0) return rhs;  // homogeneous eigen equation
        const TrigPoly& prev = table.at({key.kind, 0, key.j, key.f - 1});
        if (key.f == 1) {
            // -(alpha cos(phi) u0 - sin(phi) u0')
            rhs = scale(mul_factor(prev, ElemFactor::Cos), ExtScalar(-alpha)) +
                  mul_factor(derivative(prev), ElemFactor::Sin);
        } else {
            // -[(alpha+f)(alpha+f-1) cos(phi) u_{f-1} - sin(phi) u_{f-1}' + cos(phi) u_{f-1}'']
            Rational beta = alpha + Rational(key.f);
            TrigPoly d1 = derivative(prev);
            rhs = scale(mul_factor(prev, ElemFactor::Cos), ExtScalar(-(beta * (beta - Rational(1))))) +
                  mul_factor(d1, ElemFactor::Sin) -
                  mul_factor(derivative(d1), ElemFactor::Cos);
        }
        return rhs;
    }

    // h >= 2; s = alpha + h + f
    const Rational s = alpha + Rational(key.h + key.f);
    if (key.f >= 1) {
        const TrigPoly& u1 = table.at({key.kind, key.h, key.j, key.f - 1});
        TrigPoly d1 = derivative(u1);
        Rational c1 = (s - Rational(1)) * (Rational(2) * s - Rational(1));
        rhs = rhs + scale(mul_factor(u1, ElemFactor::Cos), ExtScalar(-c1)) +
              mul_factor(d1, ElemFactor::Sin) +
              scale(mul_factor(derivative(d1), ElemFactor::Cos), ExtScalar(-2));
    }
    if (key.f >= 2) {
        const TrigPoly& u2 = table.at({key.kind, key.h, key.j, key.f - 2});
        TrigPoly d1 = derivative(u2);
        Rational c2 = (s - Rational(2)) * (s - Rational(1));
        rhs = rhs + scale(mul_factor(u2, ElemFactor::CosSq), ExtScalar(-c2)) +
              mul_factor(d1, ElemFactor::SinCos) -
              mul_factor(derivative(d1), ElemFactor::CosSq);
    }
    // theta-theta coupling: the plain function, no phi-derivative
    rhs = rhs - table.at({key.kind, key.h - 2, key.j, key.f});
    return rhs;
}

TrigPoly helmholtz_particular(const Rational& lambda, const TrigPoly& rhs) {
    TrigPoly out(rhs.freq_den());
    const Rational lambda2 = lambda * lambda;
    for (const auto& [k, t] : rhs.terms()) {
        Rational m(static_cast<long>(k), rhs.freq_den());
        Rational den = lambda2 - m * m;
        if (den.is_zero()) throw ResonantTerm(m.str());
        ExtScalar factor{Rational(1) / den};
        out.add_term(k, t.sin_c * factor, t.cos_c * factor);
    }
    return out;
}

namespace {

struct EndpointDerivs {
    ExtScalar d1, d2;  // particular' at phi1, phi2
};

EndpointDerivs particular_derivs(const TrigPoly& particular, const Geometry& g) {
    TrigPoly dp = derivative(particular);
    return {eval_exact(dp, g.phi1()), eval_exact(dp, g.phi2())};
}

}  // namespace

TrigPoly apply_neumann(const Rational& lambda, const TrigPoly& particular, const Geometry& g,
                       SolveLogEntry* log) {
    const Rational lam = lambda.abs();
    const bool degenerate = g.is_neumann_eigen(lam);
    if (log) {
        log->degenerate = degenerate;
        log->kernel_dropped = false;
    }

    Rational knum_r = lam * Rational(g.freq_den());
    if (!knum_r.is_integer()) throw DomainError("lambda off the frequency lattice: " + lam.str());
    const std::int64_t knum = knum_r.num().get_si();

    if (!degenerate && particular.term_at(knum) != nullptr)
        throw DomainError("particular carries a kernel-frequency term at " + lam.str());

    auto [d1, d2] = particular_derivs(particular, g);

    if (lam.is_zero()) {
        // Homogeneous solutions are 1 and phi. The constant is the Neumann
        // kernel; a nonzero linear component would leave the trig-poly space.
        if (d1 != d2) throw IncompatibleBC("endpoint derivatives differ at lambda = 0");
        if (!d1.is_zero()) throw ResonantTerm("0");
        if (log) log->kernel_dropped = true;
        return particular;
    }

    // y = particular + A sin(lam phi) + B cos(lam phi);
    // y'(phi_i) = 0  <=>  A lam cos(lam phi_i) - B lam sin(lam phi_i) = -d_i.
    const Rational a1 = lam * endpoint_over_pi(g.phi1());
    const Rational a2 = lam * endpoint_over_pi(g.phi2());
    const ExtScalar lamx{lam};
    ExtScalar m11 = lamx * cos_exact_pi(a1), m12 = -(lamx * sin_exact_pi(a1));
    ExtScalar m21 = lamx * cos_exact_pi(a2), m22 = -(lamx * sin_exact_pi(a2));
    ExtScalar r1 = -d1, r2 = -d2;

    ExtScalar A(0), B(0);
    ExtScalar det = m11 * m22 - m12 * m21;
    if (!degenerate) {
        if (det.is_zero()) throw SingularSystem("determinant vanished off the Neumann spectrum");
        ExtScalar inv_det = inverse(det);
        A = (r1 * m22 - r2 * m12) * inv_det;
        B = (m11 * r2 - m21 * r1) * inv_det;
    } else {
        // Rank-1 system: rows are proportional and neither is zero. Verify
        // Fredholm compatibility, then solve within the complement of the
        // kernel direction v = (-m12, m11) (the wedge eigenfunction at lam),
        // i.e. (A, B) = t (m11, m12).
        if (!det.is_zero()) throw SingularSystem("degenerate level with nonzero determinant");
        ExtScalar norm1 = m11 * m11 + m12 * m12;
        // row2 = c * row1 with c = (row2 . row1) / |row1|^2
        ExtScalar c = (m21 * m11 + m22 * m12) / norm1;
        if (c * r1 != r2) throw IncompatibleBC("degenerate system inconsistent at lambda = " + lam.str());
        ExtScalar t = r1 / norm1;
        A = t * m11;
        B = t * m12;
        if (log) log->kernel_dropped = true;
    }

    TrigPoly out = particular;
    out.add_term(knum, A, B);
    return out;
}

namespace {

// Exactly zero ODE and boundary residuals, checked after every solve.
void check_postconditions(const ShadowKey& key, const TrigPoly& y, const TrigPoly& rhs, const Rational& lambda,
                          const Geometry& g) {
    TrigPoly residual = scale(y, ExtScalar(lambda * lambda)) + derivative(derivative(y)) - rhs;
    if (!residual.empty()) throw Error("ODE residual nonzero for " + to_string(key));
    TrigPoly dy = derivative(y);
    if (!eval_exact(dy, g.phi1()).is_zero() || !eval_exact(dy, g.phi2()).is_zero())
        throw Error("Neumann residual nonzero for " + to_string(key));
}

}  // namespace

const TrigPoly& solve_shadow(const ShadowKey& key, ShadowTable& table) {
    check_key(key);
    if (const TrigPoly* hit = table.find(key)) return *hit;
    const Geometry& g = table.geometry();

    if (key.h == 0 && key.f == 0) {
        table.insert(key, g.eigenfunction(key.j), SolveLogEntry{});
        return table.at(key);
    }

    // dependencies: (h, f-1), (h, f-2), (h-2, f)
    if (key.f >= 1) solve_shadow({key.kind, key.h, key.j, key.f - 1}, table);
    if (key.f >= 2) solve_shadow({key.kind, key.h, key.j, key.f - 2}, table);
    if (key.h >= 2) solve_shadow({key.kind, key.h - 2, key.j, key.f}, table);

    const Rational lambda = shadow_exponent(g, key);
    TrigPoly rhs = build_rhs(key, table);
    SolveLogEntry log;
    TrigPoly y(g.freq_den());
    try {
        y = apply_neumann(lambda, helmholtz_particular(lambda, rhs), g, &log);
    } catch (ResonantTerm& e) {
        throw ResonantTerm(e.frequency, to_string(key));
    } catch (IncompatibleBC& e) {
        throw IncompatibleBC(std::string(e.what()) + " [at " + to_string(key) + "]");
    } catch (SingularSystem& e) {
        throw SingularSystem(std::string(e.what()) + " [at " + to_string(key) + "]");
    }
    check_postconditions(key, y, rhs, lambda, g);
    table.insert(key, std::move(y), log);
    return table.at(key);
}

ShadowTable build_table(const Geometry& g, Kind kind, std::span<const int> j_list, int max_h, int max_f,
                        std::optional<int> max_order) {
    if (max_h < 0 || max_h % 2 != 0) throw DomainError("max_h must be even and nonnegative");
    if (max_f < 0) throw DomainError("max_f must be nonnegative");
    ShadowTable table(g);
    for (int j : j_list)
        for (int h = 0; h <= max_h; h += 2)
            for (int f = 0; f <= max_f; ++f) {
                if (max_order && h + f > *max_order) continue;
                solve_shadow({kind, h, j, f}, table);
            }
    return table;
}

}  // namespace edgeshadow
