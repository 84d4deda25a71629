#include "slideocam/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "slideocam/bearing.hpp"
#include "slideocam/curvature.hpp"
#include "slideocam/errors.hpp"
#include "slideocam/feasibility.hpp"
#include "slideocam/kinetostatics.hpp"

namespace slideocam {

namespace {

constexpr double strict_backoff_rel = 1e-4;  ///< backoff from strict caps, in units of p

/// Candidate design at one eta: roller reduced per sweep_roller_radius,
/// pin matched through the bearing fit.
DesignParams candidate_at(const DesignParams& base, double eta) {
    DesignParams prm = base;
    prm.eta = eta;
    prm.a4 = sweep_roller_radius(base, eta);
    prm.a5 = pin_radius_from_roller(prm.a4);
    return prm;
}

/// Objective value at eta, +infinity when the candidate is infeasible
/// or cannot be built at all.
double objective_or_inf(const DesignParams& base, double eta) {
    try {
        const DesignParams prm = candidate_at(base, eta);
        if (!check_constraints(prm).feasible)
            return std::numeric_limits<double>::infinity();
        return objective_z(prm);
    } catch (const std::exception&) {
        return std::numeric_limits<double>::infinity();
    }
}

} // namespace

double sweep_roller_radius(const DesignParams& base, double eta) {
    const CurvatureReport curve = kappa_pitch_max(eta, base.p);
    const BearingModel model{};
    const double largest_catalogue_roller = model.slope * (base.p / 4.0) + model.offset;
    const double strict_cap = std::min({base.p / 2.0,
                                        1.0 / curve.kappa_max,
                                        largest_catalogue_roller})
                              - strict_backoff_rel * base.p;
    return std::min(eta * base.p - base.b, strict_cap);
}

SweepTable sweep(const DesignParams& base, const std::vector<double>& etas) {
    validate_params(base);

    std::vector<double> sorted = etas;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    SweepTable table{.cams = base.cams, .rows = {}};
    table.rows.reserve(sorted.size());
    for (const double eta : sorted) {
        SweepRow row{.eta = eta, .a4 = metric_nan};
        try {
            const DesignParams prm = candidate_at(base, eta);
            row.a4 = prm.a4;
            row.a5 = *prm.a5;
            if (check_constraints(prm).feasible) {
                const KinetostaticReport rep = analyze(prm);
                row.feasible = true;
                row.z = rep.z;
                row.v_L_max_um = rep.v_L_max_um;
                row.mu_min_abs_deg = rep.mu_min_abs_deg;
                row.mu_max_abs_deg = rep.mu_max_abs_deg;
                row.service_factor_pct = rep.service_factor_pct;
            }
        } catch (const std::exception&) {
            // row stays flagged infeasible with NaN metrics
        }
        table.rows.push_back(row);
    }
    return table;
}

Optimum minimize_z(const DesignParams& base, double eta_lo, double eta_hi) {
    validate_params(base);
    if (!(eta_lo <= eta_hi))
        throw std::invalid_argument("minimize_z needs eta_lo <= eta_hi");

    // Coarse pass: fixed grid over the interval, tracking the best
    // feasible cell.
    constexpr double grid_step = 1e-3;
    double best_eta = std::numeric_limits<double>::quiet_NaN();
    double best_z = std::numeric_limits<double>::infinity();
    for (double eta = eta_lo;; eta += grid_step) {
        if (eta > eta_hi)
            eta = eta_hi;
        const double z = objective_or_inf(base, eta);
        if (z < best_z) {
            best_z = z;
            best_eta = eta;
        }
        if (eta >= eta_hi)
            break;
    }
    if (!std::isfinite(best_z))
        throw InfeasibleDesignError("no feasible design in the requested eta interval");

    // Refinement: golden-section on the bracketing cells.  The objective
    // is unimodal around its constrained minimum; infeasible probes rank
    // as +infinity and push the section back inside.
    double a = std::max(eta_lo, best_eta - grid_step);
    double b = std::min(eta_hi, best_eta + grid_step);
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = objective_or_inf(base, x1);
    double f2 = objective_or_inf(base, x2);
    for (int iter = 0; iter < 120 && b - a > 1e-12; ++iter) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = objective_or_inf(base, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = objective_or_inf(base, x2);
        }
    }
    const double refined = 0.5 * (a + b);
    const double refined_z = objective_or_inf(base, refined);
    const double eta_star = (refined_z <= best_z) ? refined : best_eta;

    const DesignParams prm = candidate_at(base, eta_star);
    const ConstraintReport constraints = check_constraints(prm);
    Optimum optimum{.eta = eta_star, .a4 = prm.a4, .a5 = *prm.a5,
                    .z = objective_z(prm), .active = {}};
    for (int i = 0; i < 5; ++i)
        if (std::abs(constraints.g[static_cast<std::size_t>(i)]) <= Optimum::active_tol)
            optimum.active.push_back(i + 1);
    return optimum;
}

std::optional<SweepRow> select_compromise(const SweepTable& table,
                                          double v_L_max_um,
                                          double min_sf_pct) {
    for (const SweepRow& row : table.rows) {
        if (!row.feasible)
            continue;
        if (row.v_L_max_um <= v_L_max_um && row.service_factor_pct >= min_sf_pct)
            return row;
    }
    return std::nullopt;
}

CamOffsets three_cam_offsets(double p) {
    if (!(p > 0.0))
        throw std::invalid_argument("pitch p must be positive");
    return CamOffsets{.y12 = 4.0 * p / 3.0, .y13 = 8.0 * p / 3.0};
}

} // namespace slideocam
