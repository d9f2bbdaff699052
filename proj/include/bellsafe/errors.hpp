#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bellsafe {

/// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad files, unknown ids, violated preconditions.
/// The CLI maps these to exit status 2.
struct InputError : Error {
    using Error::Error;
};

/// A computation was refused because it exceeds a configured cap
/// (e.g. deterministic-strategy enumeration size).
struct ResourceError : Error {
    using Error::Error;
};

/// Syntax or binding error in a rule expression, with a 0-based
/// character offset into the source text.
struct ParseError : InputError {
    ParseError(const std::string& message, std::size_t pos)
        : InputError(message + " (at position " + std::to_string(pos) + ")"), position(pos) {}

    std::size_t position;
};

}  // namespace bellsafe
