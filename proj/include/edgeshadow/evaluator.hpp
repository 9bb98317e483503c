#pragma once

#include <cmath>
#include <functional>
#include <vector>

#if defined(__SIZEOF_FLOAT128__)
#include <quadmath.h>
#endif

#include "edgeshadow/shadow_recursion.hpp"

namespace edgeshadow {

namespace detail {
inline double fd_sin(double x) { return std::sin(x); }
inline double fd_cos(double x) { return std::cos(x); }
#if defined(__SIZEOF_FLOAT128__)
inline __float128 fd_sin(__float128 x) { return sinq(x); }
inline __float128 fd_cos(__float128 x) { return cosq(x); }
#endif
}  // namespace detail

/// Truncated edge expansion to assemble numerically:
///   tau = sum_{h even} sum_f d^h A(theta) rho^(alpha_j) (rho/R)^(h+f) phi_{h,j,f}(phi)
/// over h + f <= K, with A_j(theta) = cos(mode * theta).
struct SeriesSpec {
    Geometry geometry;
    Kind kind = Kind::Primal;
    int j = 1;
    double R = 1.0;  // edge radius
    int mode = 0;    // Fourier mode of the intensity function
    int K = 0;       // truncation: include all h + f <= K

    SeriesSpec() : geometry(Geometry::crack()) {}
};

/// Edge-local coordinates: rho >= 0 (distance to the edge in the cross
/// section), phi in [phi1, phi2], theta along the edge circle.
struct EdgePoint {
    double rho;
    double phi;
    double theta;
};

struct FdSteps {
    double drho;
    double dphi;
    double dtheta;
};

/// Evaluates the truncated expansion. Requires every key with h + f <= K
/// solved in the table (MissingDependency otherwise); DomainError off the
/// coordinate patch (rho < 0, rho >= R, phi outside the wedge).
double eval_tau(const SeriesSpec& spec, const ShadowTable& table, const EdgePoint& p);

/// Laplacian in edge-local coordinates (r = R + rho cos phi),
///   u_rr + u_r/rho + u_pp/rho^2 + (cos(phi) u_r - sin(phi) u_p/rho)/r + u_tt/r^2,
/// approximated by second-order central differences of the callable u.
/// R may be infinite, which drops the two curvature terms (planar wedge).
/// The point must be interior: rho > 2 drho and 2 dphi away from the faces.
template <class Real, class U>
Real laplacian_fd_t(U&& u, Real rho, Real phi, Real theta, Real drho, Real dphi, Real dtheta, Real R) {
    const Real two(2);
    Real c = detail::fd_cos(phi), s = detail::fd_sin(phi);
    Real u0 = u(rho, phi, theta);
    Real up = u(rho + drho, phi, theta), um = u(rho - drho, phi, theta);
    Real vp = u(rho, phi + dphi, theta), vm = u(rho, phi - dphi, theta);
    Real wp = u(rho, phi, theta + dtheta), wm = u(rho, phi, theta - dtheta);
    Real u_r = (up - um) / (two * drho);
    Real u_rr = (up - two * u0 + um) / (drho * drho);
    Real u_p = (vp - vm) / (two * dphi);
    Real u_pp = (vp - two * u0 + vm) / (dphi * dphi);
    Real u_tt = (wp - two * u0 + wm) / (dtheta * dtheta);
    Real acc = u_rr + u_r / rho + u_pp / (rho * rho);
    Real r = R + rho * c;
    acc += (c * u_r - s * u_p / rho) / r;
    acc += u_tt / (r * r);
    return acc;
}

/// Double-precision front end over an EdgePoint callable.
double laplacian_fd(const std::function<double(EdgePoint)>& u, const EdgePoint& p, FdSteps steps, double R,
                    const Geometry& g);

struct SlopeReport {
    double slope = 0.0;
    double intercept = 0.0;
    double expected = 0.0;  // alpha_j + K - 1
    std::vector<std::pair<double, double>> samples;  // (rho, |Delta tau|)
};

/// Sweeps rho log-uniformly over [rho_min, rho_max] (rho_max <= R/10,
/// samples >= 8), measures |Delta tau| of the truncated series by finite
/// differences at a fixed (phi, theta) probe set (keeping the largest value
/// per rho), and returns the least-squares slope of log|Delta tau| vs log rho.
/// The sweep runs in extended (quad) precision: the residual of a K-truncated
/// series is rho^(K+1) smaller than the individual Laplacian terms, below the
/// double-precision FD noise floor for K >= 2 on the rho ranges of interest.
SlopeReport residual_slope(const SeriesSpec& spec, const ShadowTable& table, double rho_min, double rho_max,
                           int samples);

}  // namespace edgeshadow
