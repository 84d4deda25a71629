#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "slideocam/design_params.hpp"

namespace slideocam {

inline constexpr double metric_nan = std::numeric_limits<double>::quiet_NaN();

/// One evaluated design in an eccentricity sweep.  Metric fields hold
/// NaN when the design is infeasible and the metric was not evaluated.
struct SweepRow {
    double eta;
    double a4;                          ///< roller radius after reduction [mm]
    double a5 = metric_nan;             ///< matched pin radius [mm], NaN if none exists
    bool feasible = false;
    double z = metric_nan;              ///< design objective
    double v_L_max_um = metric_nan;     ///< worst pin deflection [um]
    double mu_min_abs_deg = metric_nan; ///< smallest |mu| on driving interval [deg]
    double mu_max_abs_deg = metric_nan; ///< largest |mu| on driving interval [deg]
    double service_factor_pct = metric_nan;
};

/// Sweep result: rows in decreasing eta, tagged with the cam count they
/// were evaluated for.
struct SweepTable {
    int cams;
    std::vector<SweepRow> rows;
};

/// Roller radius used for design comparisons at a given eccentricity:
/// the assembly bound eta*p - b when it binds, otherwise the tightest of
/// the remaining caps (half-pitch, undercut limit, largest catalogue
/// roller) backed off by 1e-4 * p to keep the strict ones strict.
double sweep_roller_radius(const DesignParams& base, double eta);

/// Evaluate one design per eta with the standard roller reduction.
/// Rows that violate constraints or cannot be evaluated are flagged
/// infeasible and keep NaN metrics; nothing is dropped.  Output rows
/// are sorted by decreasing eta.
SweepTable sweep(const DesignParams& base, const std::vector<double>& etas);

/// Result of the constrained objective minimisation.
struct Optimum {
    double eta;
    double a4;                    ///< [mm]
    double a5;                    ///< [mm]
    double z;
    std::vector<int> active;      ///< 1-based constraint indices active at the optimum
    static constexpr double active_tol = 2e-4;
};

/// Minimise the objective z over eta in [eta_lo, eta_hi], with the
/// roller radius following sweep_roller_radius and the pin matched
/// through the bearing fit.
///
/// Coarse 1e-3 grid over the feasible etas, then golden-section
/// refinement around the best cell.  Throws InfeasibleDesignError when
/// no feasible design exists in the interval.
Optimum minimize_z(const DesignParams& base, double eta_lo, double eta_hi);

/// First row of a sweep (in decreasing eta) meeting both service
/// targets: v_L_max <= v_L_max_um and service factor >= min_sf_pct.
/// Returns nothing when no feasible row qualifies.
std::optional<SweepRow> select_compromise(const SweepTable& table,
                                          double v_L_max_um,
                                          double min_sf_pct);

/// Slide-axis offsets between conjugate cams of a three-cam set [mm].
struct CamOffsets {
    double y12;  ///< cam 1 -> cam 2
    double y13;  ///< cam 1 -> cam 3
};

/// Axial spacing that phases three conjugate cams by 2*pi/3 each:
/// y12 = 4*p/3, y13 = 8*p/3.
CamOffsets three_cam_offsets(double p);

} // namespace slideocam
