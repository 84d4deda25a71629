#pragma once

#include "slideocam/design_params.hpp"

namespace slideocam {

/// Pressure angle mu at cam angle psi [rad]: the angle between the
/// contact normal and the slide velocity.  Antisymmetric about psi = pi,
/// where it jumps through +/-pi/2 (the transmission locks there, which
/// is why conjugate cams hand over before reaching it).
double pressure_angle(double psi, double eta) noexcept;

/// Closed angular interval [lo, hi] [rad].
struct Interval {
    double lo;
    double hi;
};

/// Cam-angle window in which one cam of the set carries the slide:
/// [2*pi*(1 - 1/cams) - delta_ext, 2*pi - delta_ext].
Interval driving_interval(const DesignParams& prm);

/// Window in which the next conjugate cam is already able to take over:
/// [pi, 2*pi*(1 - 1/cams) - delta_ext].
Interval conjugate_overlap(const DesignParams& prm);

/// Share of the driving interval with |mu| <= 30 degrees, in percent.
double service_factor(const DesignParams& prm);

/// Force transmitted cam -> roller, in slide coordinates [N].
struct Force2 {
    double fx;  ///< lateral component, loads the roller pin sideways
    double fy;  ///< component along the slide travel, constant at F0
};

/// Contact force at cam angle psi under the design torque.
///
/// Power balance fixes the along-travel component at F0 = 2*pi*tau/p;
/// the lateral component fx = F0 * (2*pi*eta - 1)/(psi - pi) grows as
/// the contact normal tilts away from the travel direction.  Throws
/// std::domain_error at psi == pi where the normal is perpendicular to
/// the travel and the transmission locks.
Force2 transmitted_force(double psi, const DesignParams& prm);

/// Largest cantilever-tip deflection of the roller pin over the driving
/// interval [micrometres].  The full contact-force magnitude bends the
/// pin; it peaks at the interval start, where the pressure angle is
/// worst.  Derives a5 from a4 when unset.
double pin_deflection_max(const DesignParams& prm);

/// Stiffness-normalised design objective: cos^2(delta_i) / (a5/p)^4 with
/// delta_i the contact polar angle at the driving-interval start.
/// Dimensionless criterion coupling contact obliquity with pin
/// slenderness; it moves with the worst pin deflection across designs,
/// lower is better.
double objective_z(const DesignParams& prm);

/// Everything the kinetostatic evaluation of one design produces.
struct KinetostaticReport {
    double delta_ext;             ///< profile extension angle [rad]
    Interval psi_interval;        ///< driving interval [rad]
    double mu_min_abs_deg;        ///< smallest |mu| on the driving interval [deg]
    double mu_max_abs_deg;        ///< largest |mu| on the driving interval [deg]
    double service_factor_pct;    ///< share of interval with |mu| <= 30 deg [%]
    double F0_N;                  ///< along-travel force component [N]
    double fx_max_N;              ///< largest lateral force component [N]
    double v_L_max_um;            ///< worst pin-tip deflection [um]
    double z;                     ///< stiffness-normalised objective
};

/// Run the full kinetostatic evaluation.  Validates structural
/// invariants only; callers wanting a manufacturable design gate on
/// check_constraints first.
KinetostaticReport analyze(const DesignParams& prm);

} // namespace slideocam
