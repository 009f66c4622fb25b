#pragma once

#include <stdexcept>
#include <string>

namespace cfbench {

// Bad caller input (out-of-range parameter, unknown tag, empty square, ...).
struct ArgumentError : std::invalid_argument {
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// A declarative config that cannot be honored (roster composition, bad key, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Missing external prerequisite (font table entry, auth variable, ...).
struct EnvironmentError : std::runtime_error {
    explicit EnvironmentError(const std::string& what) : std::runtime_error(what) {}
};

// Work refused because it would exceed a configured budget.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Declared data that fails consistency checks on ingest.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cfbench
