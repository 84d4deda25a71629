#pragma once

#include <optional>
#include <vector>

#include "slideocam/design_params.hpp"

namespace slideocam {

/// Signed curvature of a parametric plane curve from its derivatives.
///
/// Sign convention: a circle traversed counter-clockwise has curvature
/// -1/r, so convex cam profiles (traversed clockwise in the cam frame)
/// carry positive curvature.  Throws std::domain_error when the speed
/// du^2 + dv^2 vanishes.
double curvature_parametric(double du, double dv, double ddu, double ddv);

/// Signed curvature of the pitch curve at cam angle psi (closed form).
double kappa_pitch(double psi, double eta, double p) noexcept;

/// Signed curvature of the cam profile at cam angle psi.
///
/// The profile is the inner offset of the pitch curve by the roller
/// radius: kappa_cam = kappa_pitch / (1 - a4 * kappa_pitch).  Throws
/// std::domain_error at the undercutting singularity a4 = 1/kappa_pitch.
double kappa_cam(double psi, const DesignParams& prm);

/// Shape regime of the pitch curve as a function of eta.
enum class EtaRegime {
    non_convex,   ///< eta < 1/pi: curvature changes sign, no machinable profile
    double_peak,  ///< 1/pi <= eta < 2/pi: two symmetric curvature maxima
    boundary,     ///< eta == 2/pi: the maxima merge at psi = pi
    single_peak   ///< eta > 2/pi: single curvature maximum at psi = pi
};

/// Extremal pitch-curve curvature and the convexity bound it implies.
struct CurvatureReport {
    EtaRegime regime;
    double kappa_max;                 ///< largest pitch-curve curvature [1/mm]
    std::vector<double> psi_at_max;   ///< angles attaining it, symmetric about pi [rad]
    std::optional<double> a4_bound;   ///< undercut limit 1/kappa_max [mm]; absent when non-convex
};

/// Locate and evaluate the pitch-curve curvature maxima in closed form.
///
/// In the double-peak regime the maxima sit at psi = pi +/- w with
/// w = sqrt(-4 eta^2 pi^2 + 10 eta pi - 4); at and above eta = 2/pi the
/// single maximum sits at psi = pi.  For eta < 1/pi the report is tagged
/// non_convex and carries no undercut bound (the profile cannot be
/// machined regardless of roller size), but kappa_max is still the true
/// maximum of kappa_pitch.
CurvatureReport kappa_pitch_max(double eta, double p);

} // namespace slideocam
