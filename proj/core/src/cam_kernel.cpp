#include "slideocam/cam_kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "slideocam/errors.hpp"

namespace slideocam {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;

/// Coordinate of the requested curve whose zero crossing defines the
/// angular extension of the profile.
double closure_ordinate(double psi, const DesignParams& prm, CurveKind kind) {
    const Point2 q = (kind == CurveKind::cam) ? cam_point(psi, prm) : pitch_point(psi, prm);
    return q.v;
}

} // namespace

Displacement displacement(double psi, double p) {
    return Displacement{
        .s = p * psi / two_pi - p / 2.0,
        .ds = p / two_pi,
        .dds = 0.0,
    };
}

ProfileCoefficients coefficients(double psi, double eta, double p) {
    const double c = two_pi * eta - 1.0;
    if (!(c > 0.0))
        throw InfeasibleDesignError("eta must exceed 1/(2*pi); the profile construction degenerates at eta = "
                                    + std::to_string(eta));
    const double t = psi - pi;
    const double b2 = p / two_pi;
    return ProfileCoefficients{
        .b2 = b2,
        .b3 = b2 * std::hypot(c, t),
        .delta = std::atan(t / c),
    };
}

Point2 cam_point(double psi, const DesignParams& prm) {
    const ProfileCoefficients k = coefficients(psi, prm.eta, prm.p);
    const double r = k.b3 - prm.a4;
    return Point2{
        .u = k.b2 * std::cos(psi) + r * std::cos(k.delta - psi),
        .v = -k.b2 * std::sin(psi) + r * std::sin(k.delta - psi),
    };
}

Point2 pitch_point(double psi, const DesignParams& prm) {
    const double e = prm.eccentricity();
    const double s = displacement(psi, prm.p).s;
    return Point2{
        .u = e * std::cos(psi) + s * std::sin(psi),
        .v = -e * std::sin(psi) + s * std::cos(psi),
    };
}

double extended_angle(const DesignParams& prm, CurveKind kind) {
    validate_params(prm);

    // The curve leaves v = 0 at the closure point just below psi = 0.
    // Scan towards -pi/2 until the ordinate changes sign, then bisect.
    constexpr double scan_step = pi / 4096.0;
    constexpr double scan_end = -pi / 2.0;

    double hi = 0.0;
    double f_hi = closure_ordinate(hi, prm, kind);
    if (f_hi == 0.0)
        return hi;

    double lo = hi;
    double f_lo = f_hi;
    bool bracketed = false;
    while (lo > scan_end) {
        lo = std::max(scan_end, lo - scan_step);
        f_lo = closure_ordinate(lo, prm, kind);
        if (f_lo == 0.0)
            return lo;
        if (std::signbit(f_lo) != std::signbit(f_hi)) {
            bracketed = true;
            break;
        }
        hi = lo;
        f_hi = f_lo;
    }
    if (!bracketed)
        throw InfeasibleDesignError("profile does not close: no zero crossing in [-pi/2, 0)");

    for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = closure_ordinate(mid, prm, kind);
        if (f_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }

    const double root = 0.5 * (lo + hi);
    if (std::abs(closure_ordinate(root, prm, kind)) > 1e-12 * prm.p)
        throw InfeasibleDesignError("profile closure root failed the residual check");
    return root;
}

CamProfile sample_profile(const DesignParams& prm, int n, CurveKind kind) {
    if (n < 2)
        throw std::invalid_argument("sample_profile needs at least 2 samples, got " + std::to_string(n));
    validate_params(prm);

    const double delta_ext = extended_angle(prm, kind);
    CamProfile profile{.kind = kind, .delta_ext = delta_ext, .samples = {}};
    profile.samples.reserve(static_cast<std::size_t>(n));

    const double lo = delta_ext;
    const double hi = two_pi - delta_ext;
    for (int i = 0; i < n; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(n - 1);
        const double psi = std::lerp(lo, hi, frac);
        const Point2 q = (kind == CurveKind::cam) ? cam_point(psi, prm) : pitch_point(psi, prm);
        profile.samples.push_back(ProfileSample{.psi = psi, .u = q.u, .v = q.v});
    }
    return profile;
}

} // namespace slideocam
