#pragma once

#include <numbers>
#include <optional>

namespace slideocam {

/// Parameter set describing one cam-roller transmission design.
///
/// The mechanism turns a cam shaft into a linear slide motion through
/// cylindrical rollers riding on conjugate cam profiles.  Lengths are in
/// millimetres, torque in newton-millimetres, pressure in megapascals.
struct DesignParams {
    double p = 50.0;      ///< slide travel per cam turn (linear pitch) [mm]
    double eta = 0.5;     ///< eccentricity ratio e/p, dimensionless
    double a4 = 15.5;     ///< roller radius [mm]
    std::optional<double> a5{};  ///< roller-pin radius [mm]; derived from a4 when unset
    double b = 9.5;       ///< camshaft radius [mm]
    double L = 10.0;      ///< cantilevered pin length [mm]
    double tau = 1200.0;  ///< input torque per cam [N mm]
    double E = 2.0e5;     ///< pin Young modulus [MPa]
    int cams = 2;         ///< number of conjugate cams sharing the load (2 or 3)

    /// Axis offset between cam rotation centre and roller line of travel [mm].
    double eccentricity() const { return eta * p; }
};

/// Below this eccentricity ratio the profile construction degenerates:
/// the polar radius b3 loses its sign and no closed profile exists.
inline constexpr double eta_validity_min = 1.0 / (2.0 * std::numbers::pi);

/// Check structural invariants that every operation relies on.
///
/// Throws InfeasibleDesignError naming the offending field when
/// p, a4, L, tau or E is non-positive, a5 is set but non-positive,
/// b is negative, eta <= 1/(2*pi), or cams is neither 2 nor 3.
void validate_params(const DesignParams& prm);

} // namespace slideocam
