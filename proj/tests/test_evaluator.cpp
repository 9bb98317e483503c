#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>

#include "edgeshadow/evaluator.hpp"

using namespace edgeshadow;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

ShadowTable crack_table(Kind kind = Kind::Primal, int max = 6) {
    std::array<int, 1> j1{1};
    return build_table(Geometry::crack(), kind, j1, max, max);
}

}  // namespace

TEST_CASE("eval_tau leading term") {
    ShadowTable t = crack_table();
    SeriesSpec spec;  // crack, primal, j=1, R=1, mode=0, K=0
    CHECK(eval_tau(spec, t, {0.25, M_PI, 0.0}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(eval_tau(spec, t, {0.0, 1.0, 0.0}) == 0.0);
    spec.K = 1;
    CHECK(eval_tau(spec, t, {0.04, M_PI, 2.2}) == doctest::Approx(0.202).epsilon(1e-12));
    CHECK_THROWS_AS(eval_tau(spec, t, {1.5, M_PI, 0.0}), DomainError);   // rho >= R
    CHECK_THROWS_AS(eval_tau(spec, t, {0.1, 4.0, 0.0}), DomainError);    // phi outside wedge
}

TEST_CASE("eval_tau handles the dual exponent") {
    ShadowTable t = crack_table(Kind::Dual, 0);
    SeriesSpec spec;
    spec.kind = Kind::Dual;
    // K=0 dual leading term: rho^(-1/2) sin(phi/2)
    CHECK(eval_tau(spec, t, {0.25, M_PI, 0.0}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(eval_tau(spec, t, {0.0, M_PI, 0.0}), DomainError);  // singular at the edge
}

TEST_CASE("eval_tau is theta-independent in the axisymmetric case") {
    ShadowTable t = crack_table();
    SeriesSpec spec;
    spec.K = 4;
    double base = eval_tau(spec, t, {0.05, 1.1, 0.0});
    for (double theta : {0.3, 1.7, 3.9, 6.1})
        CHECK(std::abs(eval_tau(spec, t, {0.05, 1.1, theta}) - base) < 1e-14);
}

TEST_CASE("laplacian_fd on closed-form fields") {
    Geometry c = Geometry::crack();
    FdSteps steps{1e-4, 1e-4, 1e-4};
    SUBCASE("planar harmonic rho^(1/2) sin(phi/2), curvature disabled") {
        auto u = [](EdgePoint p) { return std::sqrt(p.rho) * std::sin(p.phi / 2); };
        CHECK(std::abs(laplacian_fd(u, {0.1, 1.0, 0.0}, steps, kInf, c)) < 1e-6);
        CHECK(std::abs(laplacian_fd(u, {0.1, 2.5, 0.0}, steps, kInf, c)) < 1e-6);
    }
    SUBCASE("u = r^2 has Laplacian 4 (closed-form oracle)") {
        const double R = 2.0;
        auto u = [R](EdgePoint p) {
            double r = R + p.rho * std::cos(p.phi);
            return r * r;
        };
        CHECK(laplacian_fd(u, {0.3, 0.7, 0.0}, steps, R, c) == doctest::Approx(4.0).epsilon(1e-6));
    }
    SUBCASE("constants are harmonic") {
        auto u = [](EdgePoint) { return 1.0; };
        CHECK(std::abs(laplacian_fd(u, {0.2, 1.0, 0.0}, steps, 1.0, c)) < 1e-10);
    }
    SUBCASE("u = r cos(theta) is harmonic (exercises the theta term)") {
        const double R = 1.5;
        auto u = [R](EdgePoint p) { return (R + p.rho * std::cos(p.phi)) * std::cos(p.theta); };
        // rho not too small: the u_pp/rho^2 stencil amplifies roundoff by 1/(dphi^2 rho^2)
        CHECK(std::abs(laplacian_fd(u, {0.3, 0.9, 0.7}, steps, R, c)) < 1e-6);
        CHECK(std::abs(laplacian_fd(u, {0.25, -2.0, 2.4}, steps, R, c)) < 1e-6);
    }
    SUBCASE("stencil must stay interior") {
        auto u = [](EdgePoint) { return 1.0; };
        CHECK_THROWS_AS(laplacian_fd(u, {1e-5, 1.0, 0.0}, steps, 1.0, c), DomainError);
        CHECK_THROWS_AS(laplacian_fd(u, {0.2, M_PI - 1e-5, 0.0}, steps, 1.0, c), DomainError);
    }
}

TEST_CASE("face derivative vanishes in the limit (Neumann faces)") {
    ShadowTable t = crack_table();
    SeriesSpec spec;
    spec.K = 2;
    Geometry c = Geometry::crack();
    const double rho = 0.04;
    for (double face : {c.phi1_value(), c.phi2_value()}) {
        double inward = face == c.phi1_value() ? 1.0 : -1.0;
        double tau_face = eval_tau(spec, t, {rho, face, 0});
        double prev = 1e9;
        for (double eps : {1e-3, 1e-4, 1e-5}) {
            // one-sided difference for the angular derivative at the face
            double d = std::abs(eval_tau(spec, t, {rho, face + inward * eps, 0}) - tau_face) / eps;
            CHECK(d < prev);  // scales to zero with eps
            prev = d;
            if (eps == 1e-5) CHECK(d < 1e-6);
        }
    }
}

TEST_CASE("residual_slope matches the truncation order") {
    SUBCASE("crack K=0") {
        ShadowTable t = crack_table(Kind::Primal, 0);
        SeriesSpec spec;
        spec.K = 0;
        SlopeReport r = residual_slope(spec, t, 1e-3, 1e-2, 8);
        CHECK(r.expected == doctest::Approx(-0.5));
        CHECK(std::abs(r.slope - r.expected) < 0.3);
        CHECK(r.samples.size() == 8);
    }
    SUBCASE("preconditions") {
        ShadowTable t = crack_table(Kind::Primal, 0);
        SeriesSpec spec;
        CHECK_THROWS_AS(residual_slope(spec, t, 1e-3, 0.2, 8), DomainError);   // beyond R/10
        CHECK_THROWS_AS(residual_slope(spec, t, 1e-3, 1e-2, 4), DomainError);  // too few samples
        CHECK_THROWS_AS(residual_slope(spec, t, 0.0, 1e-2, 8), DomainError);
    }
}

TEST_CASE("residual slope increases strictly with the truncation order") {
    for (Geometry g : {Geometry::crack(), Geometry::vnotch90()}) {
        std::array<int, 1> j1{1};
        ShadowTable t = build_table(g, Kind::Primal, j1, 4, 4, 4);
        double prev = -1e9;
        for (int K = 0; K <= 4; ++K) {
            SeriesSpec spec;
            spec.geometry = g;
            spec.K = K;
            spec.mode = 2;
            SlopeReport r = residual_slope(spec, t, 1e-3, 1e-2, 8);
            CHECK(std::abs(r.slope - r.expected) < 0.3);
            CHECK(r.slope > prev);
            prev = r.slope;
        }
    }
}
