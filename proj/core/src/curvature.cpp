#include "slideocam/curvature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "slideocam/errors.hpp"

namespace slideocam {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;

/// Peak curvature in the regime where it sits at psi = pi.
double kappa_max_at_centre(double eta, double p) {
    const double x = eta * pi;
    const double num = 2.0 * x * x - 3.0 * x + 1.0;
    const double den = 4.0 * x * x - 4.0 * x + 1.0;
    return (4.0 * pi / p) * num / std::pow(den, 1.5);
}

/// Peak curvature in the regime with two symmetric maxima.
double kappa_max_off_centre(double eta, double p) {
    const double x = eta * pi;
    return 4.0 * pi / (3.0 * p * std::sqrt(6.0 * x - 3.0));
}

/// Offset of the two symmetric maxima from psi = pi.
double peak_offset(double eta) {
    const double x = eta * pi;
    return std::sqrt(std::max(0.0, -4.0 * x * x + 10.0 * x - 4.0));
}

} // namespace

double curvature_parametric(double du, double dv, double ddu, double ddv) {
    const double speed_sq = du * du + dv * dv;
    if (speed_sq == 0.0)
        throw std::domain_error("curvature is undefined at a stationary point of the parametrisation");
    return (dv * ddu - du * ddv) / (speed_sq * std::sqrt(speed_sq));
}

double kappa_pitch(double psi, double eta, double p) noexcept {
    const double c = two_pi * eta - 1.0;
    const double t = psi - pi;
    const double numerator = t * t + 2.0 * c * (pi * eta - 1.0);
    const double q = t * t + c * c;
    return (two_pi / p) * numerator / (q * std::sqrt(q));
}

double kappa_cam(double psi, const DesignParams& prm) {
    const double kp = kappa_pitch(psi, prm.eta, prm.p);
    const double den = 1.0 - prm.a4 * kp;
    if (den == 0.0)
        throw std::domain_error("cam curvature is singular: roller radius equals the pitch radius of curvature");
    return kp / den;
}

CurvatureReport kappa_pitch_max(double eta, double p) {
    if (!(p > 0.0))
        throw InfeasibleDesignError("pitch p must be positive");
    if (!(eta > 1.0 / two_pi))
        throw InfeasibleDesignError("eta must exceed 1/(2*pi); curvature extrema are undefined below");

    CurvatureReport report;
    if (eta >= 2.0 / pi) {
        report.regime = (eta == 2.0 / pi) ? EtaRegime::boundary : EtaRegime::single_peak;
        report.kappa_max = kappa_max_at_centre(eta, p);
        report.psi_at_max = {pi};
        report.a4_bound = 1.0 / report.kappa_max;
        return report;
    }

    const double w = peak_offset(eta);
    report.regime = (eta < 1.0 / pi) ? EtaRegime::non_convex : EtaRegime::double_peak;
    report.kappa_max = kappa_max_off_centre(eta, p);
    report.psi_at_max = {pi - w, pi + w};
    if (report.regime == EtaRegime::double_peak)
        report.a4_bound = 1.0 / report.kappa_max;
    return report;
}

} // namespace slideocam
