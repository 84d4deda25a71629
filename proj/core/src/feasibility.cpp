#include "slideocam/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "slideocam/bearing.hpp"
#include "slideocam/curvature.hpp"
#include "slideocam/errors.hpp"

namespace slideocam {

namespace {
constexpr double pi = std::numbers::pi;
} // namespace

const std::array<std::string_view, 5>& constraint_names() {
    static const std::array<std::string_view, 5> names{
        "convexity",
        "roller-interference",
        "undercut",
        "assembly",
        "pin-interference",
    };
    return names;
}

ConstraintReport check_constraints(const DesignParams& prm) {
    validate_params(prm);

    const double alpha4 = prm.a4 / prm.p;
    const CurvatureReport curve = kappa_pitch_max(prm.eta, prm.p);

    ConstraintReport report;
    report.g[0] = 1.0 / pi - prm.eta;
    report.g[1] = alpha4 - 0.5;
    report.g[2] = alpha4 - 1.0 / (prm.p * curve.kappa_max);
    report.g[3] = alpha4 - prm.eta + prm.b / prm.p;

    double a5 = prm.a5.value_or(std::numeric_limits<double>::quiet_NaN());
    if (!prm.a5) {
        const BearingModel model{};
        if (prm.a4 > model.offset)
            a5 = pin_radius_from_roller(prm.a4, model);
    }
    report.g[4] = std::isnan(a5) ? std::numeric_limits<double>::infinity() : a5 / prm.p - 0.25;

    // g1 and g4 admit equality; designs are routinely constructed to sit
    // exactly on those bounds, so absorb float rounding of the margin.
    constexpr double eq_tol = 1e-12;
    report.convex = report.g[0] <= eq_tol;
    report.undercut_free = report.g[2] < 0.0;
    report.feasible = report.g[0] <= eq_tol && report.g[1] < 0.0 && report.g[2] < 0.0
                      && report.g[3] <= eq_tol && report.g[4] < 0.0;
    report.a4_upper_bound = report.convex
        ? std::min({prm.p / 2.0, 1.0 / curve.kappa_max, prm.eta * prm.p - prm.b})
        : std::numeric_limits<double>::quiet_NaN();

    for (int i = 0; i < 5; ++i)
        if (std::abs(report.g[static_cast<std::size_t>(i)]) <= ConstraintReport::active_tol)
            report.active.push_back(i + 1);
    return report;
}

double a4_admissible_bound(const DesignParams& prm) {
    validate_params(prm);
    if (prm.eta < 1.0 / pi)
        throw InfeasibleDesignError("eta is below the convexity bound 1/pi: no admissible roller radius exists");
    const CurvatureReport curve = kappa_pitch_max(prm.eta, prm.p);
    return std::min({prm.p / 2.0, 1.0 / curve.kappa_max, prm.eta * prm.p - prm.b});
}

} // namespace slideocam
