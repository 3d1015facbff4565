#pragma once

#include <stdexcept>
#include <string>

namespace satokit {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mixing values that live over different coefficient fields.
struct field_mismatch : error {
    using error::error;
};

/// An operation needed a coefficient that the declared window does not
/// determine.  The message names the violated bound.
struct precision_error : error {
    using error::error;
};

/// Operation restricted to characteristic zero (Schur machinery, tau, KP).
struct char_error : error {
    using error::error;
};

/// Structurally invalid input: composite characteristic, dependent frame,
/// malformed file, ...
struct input_error : error {
    using error::error;
};

} // namespace satokit
