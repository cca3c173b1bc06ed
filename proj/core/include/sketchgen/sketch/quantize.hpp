#pragma once

#include <vector>

#include "sketchgen/sketch/types.hpp"

namespace sketchgen::sketch {

struct RawSketch {
    std::vector<Point2> vertices;
    std::vector<Hyperedge> edges;
};

// Fits the sketch into a grid_size x grid_size grid: uniform scale so the
// longer bounding-box side spans [0, grid_size - 1], shorter side centered,
// coordinates rounded half away from zero. Vertices landing on the same cell
// are merged (first occurrence keeps its slot) and edges re-indexed.
SketchHypergraph quantize_sketch(const RawSketch& raw, int grid_size = kGridSize);

// Merges exactly coincident vertices (the first occurrence keeps its slot)
// and re-indexes edges. Unreferenced vertices are kept.
SketchHypergraph merge_duplicate_vertices(const SketchHypergraph& sketch);

} // namespace sketchgen::sketch
