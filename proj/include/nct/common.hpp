#pragma once

#include <stdexcept>
#include <string>

namespace nct {

// Base for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic between scalars of different backends (no silent promotion).
struct backend_error : error {
    using error::error;
};

// Division by an exact zero, singular matrix inversion, non-exact polynomial division.
struct arithmetic_error : error {
    using error::error;
};

// Dimension or index-list violations.
struct dimension_error : error {
    using error::error;
};

// Malformed input text (scalar literals, matrix files).
struct parse_error : error {
    using error::error;
};

// Operation precondition violated (e.g. non-positive pfaffian where one is required).
struct precondition_error : error {
    using error::error;
};

} // namespace nct
