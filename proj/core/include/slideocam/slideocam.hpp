#pragma once

/// Umbrella header for the slideocam cam-synthesis library.

#include "slideocam/bearing.hpp"
#include "slideocam/cam_kernel.hpp"
#include "slideocam/config.hpp"
#include "slideocam/curvature.hpp"
#include "slideocam/design_params.hpp"
#include "slideocam/errors.hpp"
#include "slideocam/export.hpp"
#include "slideocam/feasibility.hpp"
#include "slideocam/kinetostatics.hpp"
#include "slideocam/optimizer.hpp"
#include "slideocam/version.hpp"
