#include "slideocam/design_params.hpp"

#include "slideocam/errors.hpp"

namespace slideocam {

void validate_params(const DesignParams& prm) {
    if (!(prm.p > 0.0))
        throw InfeasibleDesignError("pitch p must be positive");
    if (!(prm.eta > eta_validity_min))
        throw InfeasibleDesignError("eta must exceed 1/(2*pi); below that the profile construction degenerates");
    if (!(prm.a4 > 0.0))
        throw InfeasibleDesignError("roller radius a4 must be positive");
    if (prm.a5 && !(*prm.a5 > 0.0))
        throw InfeasibleDesignError("pin radius a5 must be positive when given");
    if (!(prm.b >= 0.0))
        throw InfeasibleDesignError("shaft radius b must not be negative");
    if (!(prm.L > 0.0))
        throw InfeasibleDesignError("pin length L must be positive");
    if (!(prm.tau > 0.0))
        throw InfeasibleDesignError("torque tau must be positive");
    if (!(prm.E > 0.0))
        throw InfeasibleDesignError("Young modulus E must be positive");
    if (prm.cams != 2 && prm.cams != 3)
        throw InfeasibleDesignError("cams must be 2 or 3");
}

} // namespace slideocam
