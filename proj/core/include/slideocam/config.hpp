#pragma once

#include <string>

#include "slideocam/design_params.hpp"

namespace slideocam {

/// A design read from a configuration document, plus run options that
/// travel with it.
struct DesignConfig {
    DesignParams params;
    int samples = 1024;  ///< default profile sample count
};

/// Parse a JSON configuration document.
///
/// Recognised keys (all numbers): p_mm, eta, a4_mm, a5_mm, b_mm, L_mm,
/// tau_Nm, E_MPa, cams, samples.  eta is required; a4_mm defaults to the
/// standard roller reduction for that eta; a5_mm stays unset (derived
/// later) unless given.  Torque converts N·m -> N·mm.
///
/// Unknown keys, non-object documents and wrongly typed values raise
/// ConfigError; values that describe an impossible mechanism (structural
/// invariants, an oversized roller or pin) raise InfeasibleDesignError
/// naming the violated constraint.  `origin` labels the document in
/// error messages.
DesignConfig parse_config(const std::string& text, const std::string& origin = "config");

/// Read and parse a configuration file.  Raises IoError when the file
/// cannot be read; parse/validation errors as in parse_config.
DesignConfig load_config(const std::string& path);

} // namespace slideocam
