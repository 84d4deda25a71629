#pragma once

namespace slideocam {

/// Linear catalogue fit tying a needle-bearing roller to the pin it rides
/// on: a4 = slope * a5 + offset [mm], valid across the load range the
/// series is rated for [N].
struct BearingModel {
    double slope = 1.6;
    double offset = 5.0;
    double load_min = 844.0;   ///< smallest rated radial load [N]
    double load_max = 7020.0;  ///< largest rated radial load [N]
};

/// Pin radius matching a roller of radius a4 [mm].
///
/// Inverts the catalogue fit: a5 = (a4 - offset) / slope.  Throws
/// std::invalid_argument when a4 <= offset (no pin in the series).
double pin_radius_from_roller(double a4, const BearingModel& model = {});

/// Roller radius carried by a pin of radius a5 [mm].  Requires a5 > 0.
double roller_radius_from_pin(double a5, const BearingModel& model = {});

} // namespace slideocam
