#pragma once

namespace slideocam {

inline constexpr const char* project_name = "slideocam";
inline constexpr const char* project_version = "0.1.0";

} // namespace slideocam
