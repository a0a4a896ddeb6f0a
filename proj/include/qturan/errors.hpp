#pragma once

#include <stdexcept>
#include <string>

namespace qturan {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside the mathematical domain of an operation
/// (q outside (0,1), non-positive gamma argument, zero divisor, ...).
struct domain_error : error {
    using error::error;
};

/// An operation was requested in a mode that cannot honour it exactly
/// (e.g. a non-integer argument to an exact-mode-only evaluation).
struct mode_error : error {
    using error::error;
};

/// Two truncated series of different orders were combined.
struct order_error : error {
    using error::error;
};

/// A grid/manifest specification could not be parsed or is inconsistent.
struct grid_error : error {
    using error::error;
};

} // namespace qturan
