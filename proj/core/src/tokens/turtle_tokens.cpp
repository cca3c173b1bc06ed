#include "sketchgen/tokens/turtle_tokens.hpp"

#include <string>

namespace sketchgen::tokens {

namespace {

TurtleToken token_of(turtle::CommandKind kind) {
    switch (kind) {
    case turtle::CommandKind::loopstart: return TurtleToken::loopstart;
    case turtle::CommandKind::line: return TurtleToken::line;
    case turtle::CommandKind::arc: return TurtleToken::arc;
    case turtle::CommandKind::circle: return TurtleToken::circle;
    }
    return TurtleToken::end;
}

turtle::CommandKind kind_of(TurtleToken token) {
    switch (token) {
    case TurtleToken::loopstart: return turtle::CommandKind::loopstart;
    case TurtleToken::line: return turtle::CommandKind::line;
    case TurtleToken::arc: return turtle::CommandKind::arc;
    case TurtleToken::circle: return turtle::CommandKind::circle;
    default: break;
    }
    throw TokenError("start/end token is not a drawing command");
}

} // namespace

std::array<int, 7> TurtleTokenRow::to_array() const {
    return {static_cast<int>(command), coords[0], coords[1], coords[2], coords[3], coords[4], coords[5]};
}

TurtleTokenRow row_from_array(std::span<const int> values) {
    if (values.size() != 7) {
        throw TokenError("turtle row must have 7 integers, got " + std::to_string(values.size()));
    }
    if (values[0] < 0 || values[0] >= kTurtleCommandVocab) {
        throw TokenError("unknown turtle command token " + std::to_string(values[0]));
    }
    TurtleTokenRow row;
    row.command = static_cast<TurtleToken>(values[0]);
    for (std::size_t k = 0; k < kTurtleCoordSlots; ++k) {
        const int v = values[k + 1];
        if (v < 0 || v >= kTurtleCoordVocab) {
            throw TokenError("turtle coordinate token " + std::to_string(v) + " outside [0,510]");
        }
        row.coords[k] = v;
    }
    return row;
}

std::vector<TurtleTokenRow> encode_turtle(const turtle::TurtleProgram& program) {
    turtle::validate_program(program);
    std::vector<TurtleTokenRow> rows;
    rows.reserve(program.commands.size() + 2);
    rows.push_back(TurtleTokenRow{TurtleToken::start});
    for (const auto& cmd : program.commands) {
        TurtleTokenRow row;
        row.command = token_of(cmd.kind);
        for (std::size_t k = 0; k < cmd.deltas.size(); ++k) {
            row.coords[2 * k] = cmd.deltas[k].dx + kTurtleCoordOffset;
            row.coords[2 * k + 1] = cmd.deltas[k].dy + kTurtleCoordOffset;
        }
        rows.push_back(row);
    }
    rows.push_back(TurtleTokenRow{TurtleToken::end});
    return rows;
}

turtle::TurtleProgram decode_turtle(std::span<const TurtleTokenRow> rows) {
    if (rows.size() < 2 || rows.front().command != TurtleToken::start) {
        throw TokenError("turtle rows must begin with a start row");
    }
    if (rows.back().command != TurtleToken::end) {
        throw TokenError("turtle rows must finish with an end row");
    }
    turtle::TurtleProgram program;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        const auto& row = rows[i];
        if (static_cast<int>(row.command) >= kTurtleCommandVocab) {
            throw TokenError("unknown turtle command token " + std::to_string(static_cast<int>(row.command)));
        }
        if (row.command == TurtleToken::start || row.command == TurtleToken::end) {
            throw TokenError("start/end row in the middle of the sequence (row " + std::to_string(i) + ")");
        }
        turtle::TurtleCommand cmd;
        cmd.kind = kind_of(row.command);
        for (const int v : row.coords) {
            if (v < 0 || v >= kTurtleCoordVocab) {
                throw TokenError("turtle coordinate token " + std::to_string(v) + " outside [0,510]");
            }
        }
        for (std::size_t k = 0; k < turtle::arity(cmd.kind); ++k) {
            cmd.deltas.push_back(
                {row.coords[2 * k] - kTurtleCoordOffset, row.coords[2 * k + 1] - kTurtleCoordOffset});
        }
        program.commands.push_back(std::move(cmd));
    }
    turtle::validate_program(program);
    return program;
}

} // namespace sketchgen::tokens
