#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "slideocam/design_params.hpp"

namespace slideocam {

/// Signed margins of the five design constraints, each feasible when
/// negative (g1, g4 admit equality; g2, g3, g5 are strict):
///   g1  convexity            1/pi - eta        <= 0
///   g2  roller interference  a4/p - 1/2        <  0
///   g3  undercutting         a4/p - 1/(p*kmax) <  0
///   g4  assembly             a4/p - eta + b/p  <= 0
///   g5  pin interference     a5/p - 1/4        <  0
struct ConstraintReport {
    std::array<double, 5> g{};        ///< margins in index order g1..g5
    double a4_upper_bound;            ///< min roller cap from g2/g3/g4 [mm]; NaN when non-convex
    bool convex;                      ///< g1 holds
    bool undercut_free;               ///< g3 holds
    bool feasible;                    ///< all five hold
    std::vector<int> active;          ///< 1-based indices with |g| <= active_tol
    static constexpr double active_tol = 1e-6;
};

/// Human-readable names for g1..g5, index-aligned with ConstraintReport::g.
const std::array<std::string_view, 5>& constraint_names();

/// Evaluate all five constraint margins for a design.
///
/// When prm.a5 is unset the pin radius is derived from the roller through
/// the bearing catalogue fit; a roller too small to carry any pin makes
/// g5 +infinity.  Throws InfeasibleDesignError only for structurally
/// invalid parameters (validate_params); an infeasible but well-formed
/// design comes back with feasible == false.
ConstraintReport check_constraints(const DesignParams& prm);

/// Largest admissible roller radius min(p/2, 1/kappa_max, eta*p - b) [mm].
///
/// Requires the convex regime; throws InfeasibleDesignError for
/// eta < 1/pi where no convexity-preserving bound exists.
double a4_admissible_bound(const DesignParams& prm);

} // namespace slideocam
