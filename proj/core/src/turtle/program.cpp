#include "sketchgen/turtle/program.hpp"

#include <cstdlib>

namespace sketchgen::turtle {

std::string_view to_string(CommandKind kind) {
    switch (kind) {
    case CommandKind::loopstart: return "loopstart";
    case CommandKind::line: return "line";
    case CommandKind::arc: return "arc";
    case CommandKind::circle: return "circle";
    }
    return "unknown";
}

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& message)
    : TurtleError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

void validate_program(const TurtleProgram& program) {
    const auto& cmds = program.commands;
    if (cmds.size() > kMaxCommands) {
        throw StructureError("program has " + std::to_string(cmds.size()) + " commands; the limit is " +
                             std::to_string(kMaxCommands));
    }
    for (std::size_t i = 0; i < cmds.size(); ++i) {
        const auto& c = cmds[i];
        if (c.deltas.size() != arity(c.kind)) {
            throw ArityError(std::string(to_string(c.kind)) + " takes " + std::to_string(arity(c.kind)) +
                             " displacement(s), got " + std::to_string(c.deltas.size()) + " (command " +
                             std::to_string(i) + ")");
        }
        for (const auto& d : c.deltas) {
            if (std::abs(d.dx) > kMaxDelta || std::abs(d.dy) > kMaxDelta) {
                throw RangeError("displacement component exceeds 255 in command " + std::to_string(i));
            }
        }
    }
    if (cmds.empty()) {
        return;
    }
    if (cmds.front().kind != CommandKind::loopstart) {
        throw StructureError("program must begin with loopstart");
    }
    for (std::size_t i = 0; i < cmds.size(); ++i) {
        if (cmds[i].kind == CommandKind::loopstart &&
            (i + 1 == cmds.size() || cmds[i + 1].kind == CommandKind::loopstart)) {
            throw StructureError("loopstart at command " + std::to_string(i) + " is not followed by a draw command");
        }
    }
}

std::size_t loop_count(const TurtleProgram& program) {
    std::size_t n = 0;
    for (const auto& c : program.commands) {
        n += c.kind == CommandKind::loopstart ? 1 : 0;
    }
    return n;
}

} // namespace sketchgen::turtle
