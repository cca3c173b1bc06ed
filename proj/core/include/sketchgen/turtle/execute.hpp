#pragma once

#include "sketchgen/sketch/types.hpp"
#include "sketchgen/turtle/program.hpp"

namespace sketchgen::turtle {

class OutOfGridError : public TurtleError {
public:
    using TurtleError::TurtleError;
};

// Draws the program. The pen starts at (0,0) and returns there after each
// loop; coincident points share one vertex id. Throws OutOfGridError when an
// absolute coordinate leaves [0,255], plus the validate_program errors.
sketch::SketchHypergraph execute(const TurtleProgram& program);

} // namespace sketchgen::turtle
