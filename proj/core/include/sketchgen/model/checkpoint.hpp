#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "sketchgen/model/generators.hpp"
#include "sketchgen/util/error.hpp"

namespace sketchgen::model {

inline constexpr std::string_view kCheckpointFormat = "sketchgen-checkpoint";
inline constexpr int kCheckpointVersion = 1;

class CheckpointError : public InputError {
public:
    using InputError::InputError;
};

using Generator = std::variant<CurveGen, TurtleGen>;

// JSON document:
//   {"format": "sketchgen-checkpoint", "version": 1,
//    "generator": "curvegen" | "turtlegen",
//    "models": {"vertex": M, "curve": M} | {"turtle": M},
//    "prefixes": [[[7 ints], ...], ...]}            (turtlegen only)
// with M = {"config": {...}, "parameters": [{"name", "rows", "cols",
// "data": [row-major values]}]}. Doubles are written with round-trip precision.
std::string serialize_checkpoint(const Generator& generator);
// Throws CheckpointError on a wrong format tag, an unknown version, or a
// missing or mis-shaped parameter.
Generator parse_checkpoint(std::string_view text);

void save_checkpoint(const std::filesystem::path& path, const Generator& generator);
Generator load_checkpoint(const std::filesystem::path& path);

} // namespace sketchgen::model
