#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sketchgen/util/error.hpp"

namespace sketchgen::turtle {

inline constexpr int kMaxDelta = 255;
inline constexpr std::size_t kMaxCommands = 100;

// Integer pen displacement on the 256x256 grid.
struct Delta {
    int dx = 0;
    int dy = 0;

    friend auto operator<=>(const Delta&, const Delta&) = default;
};

enum class CommandKind : std::uint8_t { loopstart, line, arc, circle };

// Number of deltas each command carries: 1, 1, 2, 3. The circle's fourth
// point is the pen position before the command.
constexpr std::size_t arity(CommandKind kind) {
    switch (kind) {
    case CommandKind::loopstart: return 1;
    case CommandKind::line: return 1;
    case CommandKind::arc: return 2;
    case CommandKind::circle: return 3;
    }
    return 0;
}

std::string_view to_string(CommandKind kind);

struct TurtleCommand {
    CommandKind kind = CommandKind::loopstart;
    std::vector<Delta> deltas;

    friend bool operator==(const TurtleCommand&, const TurtleCommand&) = default;
};

struct TurtleProgram {
    std::vector<TurtleCommand> commands;

    friend bool operator==(const TurtleProgram&, const TurtleProgram&) = default;
};

class TurtleError : public InputError {
public:
    using InputError::InputError;
};

class SyntaxError : public TurtleError {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class ArityError : public TurtleError {
public:
    using TurtleError::TurtleError;
};

class RangeError : public TurtleError {
public:
    using TurtleError::TurtleError;
};

class StructureError : public TurtleError {
public:
    using TurtleError::TurtleError;
};

// Checks delta counts, component ranges and loop structure: starts with a
// loopstart, every loopstart is followed by a draw, at most 100 commands.
// Throws ArityError, RangeError or StructureError.
void validate_program(const TurtleProgram& program);

// Number of loops (loopstart commands) in the program.
std::size_t loop_count(const TurtleProgram& program);

} // namespace sketchgen::turtle
