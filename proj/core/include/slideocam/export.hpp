#pragma once

#include <string>

#include "slideocam/cam_kernel.hpp"
#include "slideocam/feasibility.hpp"
#include "slideocam/kinetostatics.hpp"
#include "slideocam/optimizer.hpp"

namespace slideocam {

/// Render a sampled profile as CSV: header "psi_rad,u_mm,v_mm" plus one
/// row per sample, values at full round-trip precision.
std::string profile_csv_text(const CamProfile& profile);

/// JSON report envelopes.  Every document carries the producing tool,
/// a `kind` tag, the parameters it was computed from, and the report
/// payload; NaN renders as null.
std::string report_json_text(const DesignParams& prm, const KinetostaticReport& report);
std::string report_json_text(const DesignParams& prm, const ConstraintReport& report);
std::string report_json_text(const DesignParams& prm, const SweepTable& table);
std::string report_json_text(const DesignParams& prm, const Optimum& optimum);

/// Render the cam or pitch curve as a standalone SVG document.
/// Throws std::invalid_argument when the profile has no samples.
std::string profile_svg_text(const CamProfile& profile);

/// Render the pressure-angle history of the full cam set as SVG: one
/// phase-shifted branch per cam over its driving window, with the
/// +/-30 degree service band marked.
std::string pressure_svg_text(const DesignParams& prm, int samples_per_branch = 256);

/// Write text to a file, creating or truncating it.  Throws IoError on
/// failure.
void write_text_file(const std::string& content, const std::string& path);

} // namespace slideocam
