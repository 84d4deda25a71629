#include "slideocam/bearing.hpp"

#include <stdexcept>
#include <string>

namespace slideocam {

double pin_radius_from_roller(double a4, const BearingModel& model) {
    if (!(a4 > model.offset))
        throw std::invalid_argument("no catalogue pin exists for roller radius " + std::to_string(a4)
                                    + " mm (series starts above " + std::to_string(model.offset) + " mm)");
    return (a4 - model.offset) / model.slope;
}

double roller_radius_from_pin(double a5, const BearingModel& model) {
    if (!(a5 > 0.0))
        throw std::invalid_argument("pin radius must be positive, got " + std::to_string(a5) + " mm");
    return model.slope * a5 + model.offset;
}

} // namespace slideocam
