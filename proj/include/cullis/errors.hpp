#pragma once

#include <stdexcept>
#include <string>

namespace cullis {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dimension or n/k shape violations (e.g. a determinant of a wide matrix).
struct ShapeError : Error {
    using Error::Error;
};

// 1-based index outside the declared universe.
struct BoundsError : Error {
    using Error::Error;
};

// Arithmetic between scalars of distinct fields.
struct FieldMismatchError : Error {
    using Error::Error;
};

// Malformed text input; message carries the line number.
struct ParseError : Error {
    using Error::Error;
};

// Caller broke a documented precondition (dependent set, wrong parity, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Enumeration larger than the configured cap/budget.
struct SizeCapError : Error {
    using Error::Error;
};

// Operation not available for this field (e.g. point enumeration over Q).
struct UnsupportedError : Error {
    using Error::Error;
};

} // namespace cullis
