#pragma once

#include <span>
#include <vector>

#include "sketchgen/sketch/types.hpp"
#include "sketchgen/util/error.hpp"

namespace sketchgen::tokens {

class TokenError : public InputError {
public:
    using InputError::InputError;
};

// Vertex model vocabulary: 0..255 coordinate values, 256 = stop.
inline constexpr int kVertexStopToken = 256;
inline constexpr int kVertexVocabSize = 257;

// Vertices sorted ascending by (y, x), then flattened y-first and closed
// with the stop token.
std::vector<int> encode_vertices(const sketch::SketchHypergraph& sketch);
std::vector<int> encode_vertices(std::span<const sketch::Vertex> vertices);

// Inverse of encode_vertices. Throws TokenError on a dangling half pair,
// an out-of-vocabulary token, a missing stop or tokens after the stop.
std::vector<sketch::Vertex> decode_vertices(std::span<const int> tokens);

// Best-effort decode for model samples: reads pairs up to the first stop
// (or the end) and drops a dangling half pair.
std::vector<sketch::Vertex> decode_vertices_lenient(std::span<const int> tokens);

// Sketch with vertices in (y, x) order and edges re-indexed to match; this is
// the vertex order the curve tokens point into.
sketch::SketchHypergraph sort_vertices(const sketch::SketchHypergraph& sketch);

} // namespace sketchgen::tokens
