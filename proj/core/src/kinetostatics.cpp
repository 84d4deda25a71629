#include "slideocam/kinetostatics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "slideocam/bearing.hpp"
#include "slideocam/cam_kernel.hpp"
#include "slideocam/errors.hpp"

namespace slideocam {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;
constexpr double rad_to_deg = 180.0 / pi;

/// Pin radius used by force/deflection operations: explicit when set,
/// otherwise matched to the roller through the bearing catalogue fit.
double resolved_a5(const DesignParams& prm) {
    return prm.a5 ? *prm.a5 : pin_radius_from_roller(prm.a4);
}

/// Useful (along-travel) force component fixed by power balance [N].
double base_force(const DesignParams& prm) {
    return two_pi * prm.tau / prm.p;
}

} // namespace

double pressure_angle(double psi, double eta) noexcept {
    const double c = two_pi * eta - 1.0;
    const double t = psi - pi;
    if (t == 0.0)
        return std::copysign(pi / 2.0, -c);
    return std::atan(-c / t);
}

Interval driving_interval(const DesignParams& prm) {
    const double delta_ext = extended_angle(prm, CurveKind::cam);
    const double lo = two_pi * (1.0 - 1.0 / prm.cams) - delta_ext;
    return Interval{.lo = lo, .hi = two_pi - delta_ext};
}

Interval conjugate_overlap(const DesignParams& prm) {
    const double delta_ext = extended_angle(prm, CurveKind::cam);
    return Interval{.lo = pi, .hi = two_pi * (1.0 - 1.0 / prm.cams) - delta_ext};
}

double service_factor(const DesignParams& prm) {
    validate_params(prm);
    const Interval w = driving_interval(prm);
    const double c = two_pi * prm.eta - 1.0;
    // |mu| = 30 deg where psi - pi = c * sqrt(3); beyond it the whole
    // remaining interval stays inside the service band.
    const double psi_30 = pi + c * std::numbers::sqrt3;
    const double frac = (w.hi - std::max(w.lo, psi_30)) / (w.hi - w.lo);
    return std::clamp(frac, 0.0, 1.0) * 100.0;
}

Force2 transmitted_force(double psi, const DesignParams& prm) {
    validate_params(prm);
    const double t = psi - pi;
    if (t == 0.0)
        throw std::domain_error("transmission locks at psi = pi: contact normal is perpendicular to the travel");
    const double f0 = base_force(prm);
    const double c = two_pi * prm.eta - 1.0;
    return Force2{.fx = f0 * c / t, .fy = f0};
}

double pin_deflection_max(const DesignParams& prm) {
    validate_params(prm);
    const double a5 = resolved_a5(prm);
    const Interval w = driving_interval(prm);
    const double t_i = w.lo - pi;
    const double c = two_pi * prm.eta - 1.0;
    const double force_mag = base_force(prm) * std::hypot(c, t_i) / t_i;
    const double beta = 4.0 * prm.L * prm.L * prm.L / (3.0 * prm.E * pi);
    const double deflection_mm = beta * force_mag / (a5 * a5 * a5 * a5);
    return deflection_mm * 1000.0;
}

double objective_z(const DesignParams& prm) {
    validate_params(prm);
    const double a5 = resolved_a5(prm);
    const Interval w = driving_interval(prm);
    const double t_i = w.lo - pi;
    const double c = two_pi * prm.eta - 1.0;
    const double cos_sq_delta = c * c / (c * c + t_i * t_i);
    const double alpha5 = a5 / prm.p;
    return cos_sq_delta / (alpha5 * alpha5 * alpha5 * alpha5);
}

KinetostaticReport analyze(const DesignParams& prm) {
    validate_params(prm);
    const double delta_ext = extended_angle(prm, CurveKind::cam);
    const Interval w = driving_interval(prm);

    KinetostaticReport report;
    report.delta_ext = delta_ext;
    report.psi_interval = w;
    // |mu| decreases monotonically over the driving interval, which sits
    // entirely past psi = pi: worst at the start, best at the end.
    report.mu_max_abs_deg = std::abs(pressure_angle(w.lo, prm.eta)) * rad_to_deg;
    report.mu_min_abs_deg = std::abs(pressure_angle(w.hi, prm.eta)) * rad_to_deg;
    report.service_factor_pct = service_factor(prm);
    report.F0_N = base_force(prm);
    report.fx_max_N = transmitted_force(w.lo, prm).fx;
    report.v_L_max_um = pin_deflection_max(prm);
    report.z = objective_z(prm);
    return report;
}

} // namespace slideocam
