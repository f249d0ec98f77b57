#pragma once

#include <stdexcept>
#include <string>

namespace symineq {

/// Thrown by exact_divide (and everything built on it) when the claimed
/// divisor does not divide exactly. In the certificate pipeline this is a
/// certificate failure, not a recoverable condition.
struct divisibility_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a symbolic expansion would exceed the configured size caps.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace symineq
