#pragma once

#include <stdexcept>
#include <string>

namespace corrtree {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File access failed (missing input, unwritable output).
struct IoError : Error {
    using Error::Error;
};

/// Input violates a schema or invariant (bad header, non-monotone dates, out-of-range argument).
struct ValidationError : Error {
    using Error::Error;
};

/// A quantity is numerically undefined (zero-variance column, degenerate correlation).
struct NumericalError : Error {
    using Error::Error;
};

} // namespace corrtree
