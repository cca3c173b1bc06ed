#pragma once

#include <stdexcept>
#include <string>

namespace sketchgen {

// Base for every error the library raises on bad input data. The CLI maps
// these to exit code 1; anything else is treated as an internal failure.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Geometry that admits no unique answer (collinear, coincident, zero extent).
class DegenerateGeometry : public InputError {
public:
    using InputError::InputError;
};

} // namespace sketchgen
