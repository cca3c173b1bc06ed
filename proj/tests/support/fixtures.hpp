#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sketchgen/sketch/types.hpp"
#include "sketchgen/turtle/program.hpp"
#include "sketchgen/util/random.hpp"

namespace sketchgen::testing {

// The two-loop plate: three lines and an arc around a circular hole.
inline constexpr const char* kPlateProgram =
    "loopstart((86,43)) line((169,0)) line((0,170)) line((-169,0)) arc((-86,-85),(86,-85)) "
    "loopstart((86,85)) circle((43,43),(-43,43),(-43,-43))";

sketch::SketchHypergraph rectangle(int x0, int y0, int x1, int y1);
// Circle through its four axis points.
sketch::SketchHypergraph circle(int cx, int cy, int r);
sketch::SketchHypergraph combine(const std::vector<sketch::SketchHypergraph>& parts);

// Random valid sketch made of one to three closed shapes (polygons, polygons
// with one side bulged into an arc, circles) in separate quadrants. Vertex
// and edge order are shuffled.
sketch::SketchHypergraph random_sketch(util::Rng& rng);

// Random structurally valid turtle program (not necessarily inside the grid).
turtle::TurtleProgram random_program(util::Rng& rng);

// Same sketch with vertices and edges permuted and each edge's vertex list
// rotated/reversed where that keeps its meaning.
sketch::SketchHypergraph shuffled(const sketch::SketchHypergraph& g, util::Rng& rng);

sketch::SketchHypergraph translated(const sketch::SketchHypergraph& g, int dx, int dy);
sketch::SketchHypergraph scaled(const sketch::SketchHypergraph& g, int factor);

} // namespace sketchgen::testing
