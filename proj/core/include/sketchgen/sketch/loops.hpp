#pragma once

#include <cstddef>
#include <vector>

#include "sketchgen/sketch/types.hpp"

namespace sketchgen::sketch {

// One curve of a loop, traversed forward (as listed) or reversed.
struct LoopCurve {
    std::size_t edge = 0;
    bool reversed = false;

    friend bool operator==(const LoopCurve&, const LoopCurve&) = default;
};

struct Loop {
    std::vector<LoopCurve> curves;
};

struct LoopDecomposition {
    std::vector<Loop> loops;
    // Connected groups of edges that lie on no extracted closed cycle.
    std::vector<std::vector<std::size_t>> open_chains;
};

// Partitions the edges into closed loops and open chains. A circle is a loop
// by itself; lines and arcs join their first and last vertices. Cycles are
// extracted deterministically in coordinate order, so the result does not
// depend on how vertices or edges are indexed.
LoopDecomposition find_loops(const SketchHypergraph& sketch);

// First and last vertex id of an edge as traversed in the loop.
std::size_t curve_start(const SketchHypergraph& sketch, const LoopCurve& curve);
std::size_t curve_end(const SketchHypergraph& sketch, const LoopCurve& curve);

// Vertex ids of the curve in traversal order.
std::vector<std::size_t> curve_points(const SketchHypergraph& sketch, const LoopCurve& curve);

} // namespace sketchgen::sketch
