#pragma once

/// Shared helpers for the test suites: independent finite-difference and
/// grid oracles, plus a deterministic feasible-design generator.

#include <cmath>
#include <numbers>
#include <random>

#include "slideocam/slideocam.hpp"

namespace slideocam::testing {

inline constexpr double pi_d = std::numbers::pi;
inline constexpr long double pi_l = std::numbers::pi_v<long double>;

/// Pitch-curve point evaluated in long double, for finite differences.
struct PointL {
    long double u;
    long double v;
};

inline PointL pitch_point_ld(long double psi, long double eta, long double p) {
    const long double e = eta * p;
    const long double s = p * psi / (2.0L * pi_l) - p / 2.0L;
    return PointL{
        .u = e * std::cos(psi) + s * std::sin(psi),
        .v = -e * std::sin(psi) + s * std::cos(psi),
    };
}

/// Curvature of the sampled pitch curve by central differences.
///
/// Evaluated in long double: with h = 1e-5 the second-difference
/// cancellation costs ~eps/h^2, which stays below 1e-7 relative in long
/// double but would swamp a double evaluation.
inline double fd_kappa_pitch(double psi, double eta, double p) {
    const long double h = 1e-5L;
    const long double x = psi;
    const PointL m = pitch_point_ld(x - h, eta, p);
    const PointL c = pitch_point_ld(x, eta, p);
    const PointL pl = pitch_point_ld(x + h, eta, p);
    const long double du = (pl.u - m.u) / (2.0L * h);
    const long double dv = (pl.v - m.v) / (2.0L * h);
    const long double ddu = (pl.u - 2.0L * c.u + m.u) / (h * h);
    const long double ddv = (pl.v - 2.0L * c.v + m.v) / (h * h);
    const long double speed_sq = du * du + dv * dv;
    return static_cast<double>((dv * ddu - du * ddv) / (speed_sq * std::sqrt(speed_sq)));
}

/// Location and value of the largest pitch-curve curvature, found from a
/// dense grid plus golden-section refinement (independent of the
/// closed-form extremum formulas).
struct GridMax {
    double psi;
    double kappa;
};

inline GridMax grid_max_kappa(double eta, double p, int n = 20001) {
    int best = 0;
    double best_val = -1e300;
    for (int i = 0; i < n; ++i) {
        const double psi = 2.0 * pi_d * i / (n - 1);
        const double k = kappa_pitch(psi, eta, p);
        if (k > best_val) {
            best_val = k;
            best = i;
        }
    }
    const double step = 2.0 * pi_d / (n - 1);
    double a = std::max(0.0, best * step - step);
    double b = std::min(2.0 * pi_d, best * step + step);
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = kappa_pitch(x1, eta, p);
    double f2 = kappa_pitch(x2, eta, p);
    for (int iter = 0; iter < 200 && b - a > 1e-13; ++iter) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = kappa_pitch(x1, eta, p);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = kappa_pitch(x2, eta, p);
        }
    }
    const double psi_star = 0.5 * (a + b);
    return GridMax{.psi = psi_star, .kappa = kappa_pitch(psi_star, eta, p)};
}

/// Service factor measured by counting grid samples of the pressure
/// angle over the driving interval (independent of the closed form).
inline double grid_service_factor(const DesignParams& prm, int n = 100000) {
    const Interval w = driving_interval(prm);
    int inside = 0;
    for (int i = 0; i < n; ++i) {
        const double psi = std::lerp(w.lo, w.hi, static_cast<double>(i) / (n - 1));
        if (std::abs(pressure_angle(psi, prm.eta)) <= pi_d / 6.0)
            ++inside;
    }
    return 100.0 * inside / n;
}

/// Deterministic stream of feasible designs for property tests.
inline DesignParams random_feasible(std::mt19937& rng) {
    std::uniform_real_distribution<double> eta_dist(0.34, 0.78);
    std::uniform_real_distribution<double> shrink(0.6, 1.0);
    for (;;) {
        DesignParams prm;
        prm.eta = eta_dist(rng);
        prm.cams = 2 + static_cast<int>(rng() & 1u);
        const double a4_full = sweep_roller_radius(prm, prm.eta);
        prm.a4 = std::max(5.5, a4_full * shrink(rng));
        prm.a5 = pin_radius_from_roller(prm.a4);
        if (check_constraints(prm).feasible)
            return prm;
    }
}

} // namespace slideocam::testing
