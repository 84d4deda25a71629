#pragma once

#include <vector>

#include "slideocam/design_params.hpp"

namespace slideocam {

/// Slide displacement and its angular derivatives at cam angle psi.
struct Displacement {
    double s;    ///< slide position relative to mid-stroke [mm]
    double ds;   ///< ds/dpsi [mm/rad]
    double dds;  ///< d2s/dpsi2 [mm/rad^2]
};

/// Linear displacement program: one full cam turn advances the slide by
/// exactly one pitch, centred so that s(pi) = 0.
Displacement displacement(double psi, double p);

/// Intermediate quantities of the profile construction at cam angle psi.
struct ProfileCoefficients {
    double b2;     ///< roller-centre orbit radius p/(2*pi) [mm]
    double b3;     ///< distance cam centre to roller centre [mm]
    double delta;  ///< polar angle of the roller centre in the cam frame [rad]
};

/// Compute the roller-centre construction terms for one contact position.
///
/// Requires eta > 1/(2*pi); throws InfeasibleDesignError below that bound
/// where the construction degenerates (b3 direction becomes ambiguous).
ProfileCoefficients coefficients(double psi, double eta, double p);

/// Point in the cam-fixed frame [mm].
struct Point2 {
    double u;
    double v;
};

/// Cam-profile point (roller contact envelope) at cam angle psi.
Point2 cam_point(double psi, const DesignParams& prm);

/// Pitch-curve point (roller-centre path) at cam angle psi.
Point2 pitch_point(double psi, const DesignParams& prm);

/// Which of the two concentric curves an operation refers to.
enum class CurveKind {
    cam,    ///< machined surface the roller rolls on
    pitch   ///< locus of the roller centre
};

/// Angular extension of the profile past one nominal turn.
///
/// The usable profile spans [delta_ext, 2*pi - delta_ext] with
/// delta_ext < 0: the curve closes where its v-coordinate crosses zero
/// slightly before psi = 0 and symmetrically after psi = 2*pi.  Returns
/// the largest negative root of v(psi) = 0 for the requested curve.
///
/// Throws InfeasibleDesignError when no sign change exists in the scan
/// window [-pi/2, 0) or the refined root fails the residual check.
double extended_angle(const DesignParams& prm, CurveKind kind = CurveKind::cam);

/// One sampled profile point tagged with its cam angle.
struct ProfileSample {
    double psi;  ///< cam angle [rad]
    double u;    ///< profile abscissa [mm]
    double v;    ///< profile ordinate [mm]
};

/// A sampled closed profile over the extended angular range.
struct CamProfile {
    CurveKind kind;
    double delta_ext;  ///< extension angle, negative [rad]
    std::vector<ProfileSample> samples;
};

/// Sample the cam or pitch curve at n angles spread uniformly over
/// [delta_ext, 2*pi - delta_ext], endpoints included.  Requires n >= 2.
CamProfile sample_profile(const DesignParams& prm, int n, CurveKind kind = CurveKind::cam);

} // namespace slideocam
