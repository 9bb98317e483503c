#include <doctest.h>

#include <array>

#include "edgeshadow/shadow_recursion.hpp"

using namespace edgeshadow;

namespace {

ExtScalar rat(long n, long d = 1) { return ExtScalar(Rational(n, d)); }
ExtScalar r3(long n, long d) { return ExtScalar(Rational(0), Rational(n, d)); }

ShadowTable seeded(const Geometry& g, Kind kind, int j) {
    ShadowTable t(g);
    solve_shadow({kind, 0, j, 0}, t);
    return t;
}

}  // namespace

TEST_CASE("build_rhs anchors") {
    Geometry c = Geometry::crack();
    SUBCASE("primal f=1") {
        ShadowTable t = seeded(c, Kind::Primal, 1);
        CHECK(build_rhs({Kind::Primal, 0, 1, 1}, t) == TrigPoly::sin(2, 1, rat(1, 2)));
    }
    SUBCASE("primal h=2 f=0 keeps only the coupling term") {
        ShadowTable t = seeded(c, Kind::Primal, 1);
        CHECK(build_rhs({Kind::Primal, 2, 1, 0}, t) == TrigPoly::sin(2, 1, rat(-1)));
    }
    SUBCASE("dual f=1") {
        ShadowTable t = seeded(c, Kind::Dual, 1);
        CHECK(build_rhs({Kind::Dual, 0, 1, 1}, t) == TrigPoly::sin(2, 3, rat(1, 2)));
    }
    SUBCASE("missing dependency") {
        ShadowTable t(c);
        CHECK_THROWS_AS(build_rhs({Kind::Primal, 0, 1, 1}, t), MissingDependency);
    }
}

TEST_CASE("helmholtz_particular") {
    CHECK(helmholtz_particular(Rational(3, 2), TrigPoly::sin(2, 1, rat(1, 2))) == TrigPoly::sin(2, 1, rat(1, 4)));
    CHECK(helmholtz_particular(Rational(1, 2), TrigPoly::sin(2, 3, rat(1, 2))) == TrigPoly::sin(2, 3, rat(-1, 4)));
    CHECK(helmholtz_particular(Rational(5, 2), TrigPoly(2)).empty());
    CHECK_THROWS_AS(helmholtz_particular(Rational(3, 2), TrigPoly::sin(2, 3)), ResonantTerm);
    // negative dual exponent: only lambda^2 enters
    CHECK(helmholtz_particular(Rational(-1, 2), TrigPoly::sin(2, 3, rat(1, 2))) == TrigPoly::sin(2, 3, rat(-1, 4)));
}

TEST_CASE("apply_neumann, degenerate crack level") {
    Geometry c = Geometry::crack();
    TrigPoly particular = TrigPoly::sin(2, 1, rat(1, 12)) + TrigPoly::sin(2, 3, rat(-3, 32));
    SolveLogEntry log;
    TrigPoly closed = apply_neumann(Rational(5, 2), particular, c, &log);
    CHECK(closed == particular);  // odd sines already satisfy the conditions; kernel dropped
    CHECK(log.degenerate);
    CHECK(log.kernel_dropped);
}

TEST_CASE("apply_neumann, non-degenerate notch level adds the homogeneous pair") {
    Geometry v = Geometry::vnotch90();
    ShadowTable t = seeded(v, Kind::Primal, 1);
    ShadowKey key{Kind::Primal, 0, 1, 1};
    Rational lambda = shadow_exponent(v, key);  // 5/3, not a Neumann eigenvalue
    CHECK(!v.is_neumann_eigen(lambda));
    SolveLogEntry log;
    TrigPoly y = apply_neumann(lambda, helmholtz_particular(lambda, build_rhs(key, t)), v, &log);
    TrigPoly expect(3);
    expect.add_term(1, rat(1, 4), r3(-1, 12));  // 1/(4 sqrt3) = sqrt3/12
    expect.add_term(5, rat(1, 20), r3(1, 60));
    CHECK(y == expect);
    CHECK(!log.degenerate);
    CHECK(!log.kernel_dropped);
}

TEST_CASE("solve_shadow reproduces hand-checked table entries") {
    Geometry c = Geometry::crack(), v = Geometry::vnotch90();
    SUBCASE("crack primal") {
        ShadowTable t(c);
        CHECK(solve_shadow({Kind::Primal, 0, 1, 1}, t) == TrigPoly::sin(2, 1, rat(1, 4)));
        CHECK(solve_shadow({Kind::Primal, 2, 1, 0}, t) == TrigPoly::sin(2, 1, rat(-1, 6)));
        CHECK(solve_shadow({Kind::Primal, 2, 1, 1}, t) ==
              TrigPoly::sin(2, 1, rat(-1, 8)) + TrigPoly::sin(2, 3, rat(7, 60)));
        CHECK(solve_shadow({Kind::Primal, 0, 1, 3}, t) ==
              TrigPoly::sin(2, 1, rat(1, 16)) + TrigPoly::sin(2, 3, rat(-1, 30)) + TrigPoly::sin(2, 5, rat(5, 128)));
    }
    SUBCASE("crack dual") {
        ShadowTable t(c);
        CHECK(solve_shadow({Kind::Dual, 0, 1, 1}, t) == TrigPoly::sin(2, 3, rat(-1, 4)));
        CHECK(solve_shadow({Kind::Dual, 2, 1, 0}, t) == TrigPoly::sin(2, 1, rat(-1, 2)));
    }
    SUBCASE("notch primal, mixed radicals") {
        ShadowTable t(v);
        TrigPoly expect(3);
        expect.add_term(2, rat(-3, 20), r3(-1, 20));  // -(1/20)(sqrt3 cos + 3 sin)
        CHECK(solve_shadow({Kind::Primal, 2, 1, 0}, t) == expect);
    }
}

TEST_CASE("build_table extents and determinism") {
    Geometry c = Geometry::crack();
    std::array<int, 1> j1{1};
    ShadowTable tri = build_table(c, Kind::Primal, j1, 10, 10, 10);
    CHECK(tri.size() == 36);  // triangular layout: 11+9+7+5+3+1
    ShadowTable rect = build_table(c, Kind::Dual, j1, 4, 4);
    CHECK(rect.size() == 15);
    ShadowTable empty = build_table(c, Kind::Primal, std::span<const int>{}, 10, 10);
    CHECK(empty.size() == 0);
    // same keys, independent construction order: identical entries
    ShadowTable again(c);
    for (int f = 10; f >= 0; --f)
        for (int h = 10; h >= 0; h -= 2)
            if (h + f <= 10) solve_shadow({Kind::Primal, h, 1, f}, again);
    for (const auto& [key, poly] : tri.entries()) CHECK(again.at(key) == poly);
    CHECK_THROWS_AS(build_table(c, Kind::Primal, j1, 3, 2), DomainError);
}

TEST_CASE("generated shadows satisfy the structural invariants") {
    std::array<int, 2> crack_js{1, 3};
    std::array<int, 3> notch_primal_js{1, 2, 3};
    // dual j = 0 mod 3 on the notch hits lambda = 0 levels whose solutions
    // leave the trig-poly space; the tabulated dual families avoid them
    std::array<int, 2> notch_dual_js{1, 2};
    for (Kind kind : {Kind::Primal, Kind::Dual}) {
        std::span<const int> notch_js =
            kind == Kind::Primal ? std::span<const int>(notch_primal_js) : std::span<const int>(notch_dual_js);
        for (const auto& [g, js] : {std::pair(Geometry::crack(), std::span<const int>(crack_js)),
                                    std::pair(Geometry::vnotch90(), notch_js)}) {
            ShadowTable t = build_table(g, kind, js, 6, 6);
            for (const auto& [key, y] : t.entries()) {
                Rational lambda = shadow_exponent(g, key);
                // ODE residual, exactly zero
                TrigPoly residual = scale(y, ExtScalar(lambda * lambda)) + derivative(derivative(y)) -
                                    build_rhs(key, t);
                CHECK(residual.empty());
                // Neumann faces, exactly zero
                TrigPoly dy = derivative(y);
                CHECK(eval_exact(dy, g.phi1()).is_zero());
                CHECK(eval_exact(dy, g.phi2()).is_zero());
                // frequency bound m <= alpha_j + h + f
                Rational bound = g.eigenvalue(key.j) + Rational(key.h + key.f);
                CHECK(Rational(y.max_freq_num(), g.freq_den()) <= bound);
                // degenerate shadow levels carry no kernel-frequency term
                // (the h = f = 0 eigenfunction IS the kernel element)
                if ((key.h != 0 || key.f != 0) && g.is_neumann_eigen(lambda.abs())) {
                    Rational knum = lambda.abs() * Rational(g.freq_den());
                    CHECK(y.term_at(knum.num().get_si()) == nullptr);
                    CHECK(t.log(key)->degenerate);
                }
            }
        }
    }
}

TEST_CASE("even-j crack families solve cleanly (cos family, integer frequencies)") {
    ShadowTable t(Geometry::crack());
    std::array<int, 2> js{2, 4};
    for (int j : js)
        for (int h = 0; h <= 4; h += 2)
            for (int f = 0; f <= 4; ++f) {
                const TrigPoly& y = solve_shadow({Kind::Primal, h, j, f}, t);
                for (const auto& [k, term] : y.terms()) {
                    CHECK(k % 2 == 0);
                    CHECK(term.sin_c.is_zero());
                }
            }
}

TEST_CASE("crack odd-j families are pure odd sines") {
    Geometry c = Geometry::crack();
    std::array<int, 2> js{1, 5};
    for (Kind kind : {Kind::Primal, Kind::Dual}) {
        ShadowTable t = build_table(c, kind, js, 4, 4);
        for (const auto& [key, y] : t.entries())
            for (const auto& [k, term] : y.terms()) {
                CHECK(k % 2 == 1);
                CHECK(term.cos_c.is_zero());
            }
    }
}
