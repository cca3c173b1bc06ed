#pragma once

#include "sketchgen/sketch/types.hpp"

namespace sketchgen::sketch {

// Lists every failing edge (and isolated vertex). Never throws.
ValidityReport validate_sketch(const SketchHypergraph& sketch);

inline bool is_valid(const SketchHypergraph& sketch) { return validate_sketch(sketch).is_valid; }

} // namespace sketchgen::sketch
