#pragma once

#include <stdexcept>
#include <string>

namespace slideocam {

/// Raised when a configuration document is malformed: unknown keys, wrong
/// types, or values outside their schema range.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when parameters describe a mechanism that cannot exist or cannot
/// be synthesized: degenerate geometry, empty feasible sets, and the like.
class InfeasibleDesignError : public std::runtime_error {
public:
    explicit InfeasibleDesignError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a file cannot be read or written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace slideocam
