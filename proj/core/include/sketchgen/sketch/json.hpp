#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sketchgen/sketch/quantize.hpp"
#include "sketchgen/sketch/types.hpp"
#include "sketchgen/util/error.hpp"

namespace sketchgen::sketch {

class SchemaError : public InputError {
public:
    using InputError::InputError;
};

// {"vertices":[[x,y],...],"edges":[[i,...],...]} with integer grid
// coordinates in [0,255] and 0-based indices. Compact, no trailing newline.
std::string to_json(const SketchHypergraph& sketch);

SketchHypergraph sketch_from_json(std::string_view text);

// Same layout with real-valued coordinates, for quantization input.
RawSketch raw_sketch_from_json(std::string_view text);

// Accepts one JSON object or newline-delimited objects (blank lines skipped).
std::vector<SketchHypergraph> read_sketches(std::string_view text);
std::vector<RawSketch> read_raw_sketches(std::string_view text);

// One compact object per line, each terminated by '\n'.
std::string to_ndjson(const std::vector<SketchHypergraph>& sketches);

} // namespace sketchgen::sketch
