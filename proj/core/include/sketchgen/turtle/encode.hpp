#pragma once

#include <cstdint>

#include "sketchgen/sketch/types.hpp"
#include "sketchgen/turtle/program.hpp"

namespace sketchgen::turtle {

enum class EncodeMode : std::uint8_t { canonical, randomized };

class EncodeError : public TurtleError {
public:
    using TurtleError::TurtleError;
};

// Turtle program that draws the sketch loop by loop.
//
// canonical: loops in ascending order of their nearest vertex's distance to
// (0,0); each loop starts at its lexicographically smallest curve endpoint
// and runs in the direction whose next point is lexicographically smaller.
// The result is independent of vertex and edge indexing.
//
// randomized: loop order, start vertex and direction are drawn from a
// generator seeded with `seed`.
//
// Throws EncodeError when an edge lies on no closed loop or the program
// would exceed 100 commands.
TurtleProgram encode(const sketch::SketchHypergraph& sketch, EncodeMode mode = EncodeMode::canonical,
                     std::uint64_t seed = 0);

} // namespace sketchgen::turtle
