#pragma once

#include <vector>

#include "sketchgen/sketch/types.hpp"

namespace sketchgen::sketch {

// Index-free canonical form: each edge becomes its coordinate sequence,
// lines and arcs up to reversal, circles up to rotation and reflection; the
// edge list is sorted and the vertex list is the sorted coordinate set.
struct CanonicalSketch {
    std::vector<Vertex> vertices;
    std::vector<std::vector<Vertex>> edges;

    friend bool operator==(const CanonicalSketch&, const CanonicalSketch&) = default;
};

// Coordinate sequence of one edge in canonical orientation. Out-of-range
// ids are skipped.
std::vector<Vertex> canonical_edge(const SketchHypergraph& sketch, std::size_t edge);

CanonicalSketch canonical_form(const SketchHypergraph& sketch);

// Equality up to vertex/edge reindexing and meaning-preserving reordering
// within an edge.
bool isomorphic(const SketchHypergraph& a, const SketchHypergraph& b);

} // namespace sketchgen::sketch
