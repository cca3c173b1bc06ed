#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sketchgen/sketch/types.hpp"
#include "sketchgen/tokens/vertex_tokens.hpp"

namespace sketchgen::tokens {

// Curve model vocabulary for a sketch with n vertices: 0..n-1 point at the
// (y, x)-sorted vertices, n ends a curve, n+1 ends the sketch.
constexpr int end_of_curve_token(std::size_t vertex_count) { return static_cast<int>(vertex_count); }
constexpr int end_of_sketch_token(std::size_t vertex_count) { return static_cast<int>(vertex_count) + 1; }

// Canonical pointer order within one curve. Lines list the smaller index
// first; arcs may only be reversed (the interior point must stay in the
// middle), so the smaller endpoint comes first; circles are rotated and
// reflected so the smallest index is first and its smaller neighbour second.
std::vector<std::size_t> canonical_curve(std::span<const std::size_t> pointers);

// Canonical curves sorted by (lowest index, length, pointers).
std::vector<sketch::Hyperedge> canonical_curves(std::span<const sketch::Hyperedge> edges);

// Tokens for the edges of `sketch`, whose vertices must already be in
// (y, x) order (see sort_vertices): each canonical curve followed by the
// end-of-curve token, then end-of-sketch.
std::vector<int> encode_curves(const sketch::SketchHypergraph& sketch);

// Inverse of encode_curves. Throws TokenError for a pointer >= n, an empty
// curve, a curve outside 2..4 pointers, a repeated pointer within a curve, a
// missing end-of-sketch or tokens after it.
std::vector<sketch::Hyperedge> decode_curves(std::span<const int> tokens, std::size_t vertex_count);

// Best-effort decode for model samples: splits on end-of-curve up to the
// first end-of-sketch, skips empty curves and keeps malformed ones so that
// validation can report them.
std::vector<sketch::Hyperedge> decode_curves_lenient(std::span<const int> tokens, std::size_t vertex_count);

} // namespace sketchgen::tokens
