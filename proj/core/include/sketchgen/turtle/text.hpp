#pragma once

#include <string>
#include <string_view>

#include "sketchgen/turtle/program.hpp"

namespace sketchgen::turtle {

// Text form:
//   program := command+
//   command := kind "(" delta ("," delta)* ")"
//   delta   := "(" int "," int ")"
// Whitespace and commas between commands are ignored; one optional pair of
// enclosing brackets is accepted. Throws SyntaxError (with line/column),
// ArityError, RangeError or StructureError.
TurtleProgram parse(std::string_view text);

// Canonical text, one command per line, each terminated by '\n'.
std::string serialize(const TurtleProgram& program);

} // namespace sketchgen::turtle
