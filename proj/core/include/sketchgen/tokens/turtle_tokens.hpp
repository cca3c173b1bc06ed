#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "sketchgen/tokens/vertex_tokens.hpp"
#include "sketchgen/turtle/program.hpp"

namespace sketchgen::tokens {

// Command ids for the first branch of a turtle row.
enum class TurtleToken : std::uint8_t { start = 0, end = 1, loopstart = 2, line = 3, arc = 4, circle = 5 };

inline constexpr int kTurtleCommandVocab = 6;
inline constexpr int kTurtleCoordOffset = 255;
inline constexpr int kTurtleCoordVocab = 511;
// Offset encoding of a zero displacement; fills unused coordinate slots.
inline constexpr int kTurtlePad = kTurtleCoordOffset;
inline constexpr std::size_t kTurtleCoordSlots = 6;

// One sequence step: command id plus three (dx, dy) pairs offset by +255.
struct TurtleTokenRow {
    TurtleToken command = TurtleToken::start;
    std::array<int, kTurtleCoordSlots> coords{kTurtlePad, kTurtlePad, kTurtlePad,
                                              kTurtlePad, kTurtlePad, kTurtlePad};

    friend bool operator==(const TurtleTokenRow&, const TurtleTokenRow&) = default;

    // [command, x1, y1, x2, y2, x3, y3]
    std::array<int, 7> to_array() const;
};

// start row, one row per command, end row.
std::vector<TurtleTokenRow> encode_turtle(const turtle::TurtleProgram& program);

// Throws TokenError for an unknown command id, a coordinate outside
// [0,510], a missing start/end row or a start/end row in the middle, and
// the turtle structure errors for an invalid decoded program.
turtle::TurtleProgram decode_turtle(std::span<const TurtleTokenRow> rows);

// Row from a raw 7-integer array; validates the command id and ranges.
TurtleTokenRow row_from_array(std::span<const int> values);

} // namespace sketchgen::tokens
