#pragma once

#include <stdexcept>
#include <string>

namespace ftl {

/// Raised when an iteration fails to converge or a computed quantity
/// leaves its admissible range.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised for malformed or incomplete run configuration.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a boundary density admits only the degenerate step
/// profile, so exponential-rate machinery does not apply.
struct step_profile_signal : std::domain_error {
    explicit step_profile_signal(const std::string& msg) : std::domain_error(msg) {}
};

} // namespace ftl
