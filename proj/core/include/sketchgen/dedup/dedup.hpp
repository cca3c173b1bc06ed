#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "sketchgen/sketch/types.hpp"

namespace sketchgen::dedup {

inline constexpr int kDefaultDedupGrid = 9;

struct Cell {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// `raw` marks edges whose primitive could not be recovered; they are keyed
// by the cells of all their vertices so they still hash deterministically.
enum class SignatureKind : std::uint8_t { line, arc, circle, raw };

struct EdgeSignature {
    SignatureKind kind = SignatureKind::line;
    std::vector<Cell> cells;
    int radius = -1; // quantized radius, -1 where not applicable

    friend auto operator<=>(const EdgeSignature&, const EdgeSignature&) = default;
};

// Sorted multiset of edge signatures. `degenerate` keys come only from
// dedup_key_lenient for sketches with no spatial extent; they compare by
// vertex/edge counts alone.
struct DedupKey {
    std::vector<EdgeSignature> edges;
    bool degenerate = false;
    std::size_t vertex_count = 0;

    friend auto operator<=>(const DedupKey&, const DedupKey&) = default;
};

// The sketch is translated so its bounding box starts at the origin and
// scaled so the longer side spans `grid` cells; vertices, circle centers and
// radii are quantized to that cell size. Lines hash their sorted endpoint
// cells, arcs add the quantized radius, circles use center cell + radius.
// Throws DegenerateGeometry when all vertices coincide.
DedupKey dedup_key(const sketch::SketchHypergraph& sketch, int grid = kDefaultDedupGrid);

// As dedup_key, but zero-extent sketches get a degenerate key instead of an
// error. Used where every sample needs a signature.
DedupKey dedup_key_lenient(const sketch::SketchHypergraph& sketch, int grid = kDefaultDedupGrid);

bool is_duplicate(const sketch::SketchHypergraph& a, const sketch::SketchHypergraph& b,
                  int grid = kDefaultDedupGrid);

struct FilterStats {
    std::size_t total = 0;
    std::size_t kept = 0;
    std::size_t duplicates = 0;
    std::size_t invalid = 0;
};

struct FilterResult {
    std::vector<sketch::SketchHypergraph> kept;
    FilterStats stats;
};

// Drops invalid sketches and every repeat of an already seen key; the first
// occurrence of each key survives, in input order.
FilterResult filter_dataset(const std::vector<sketch::SketchHypergraph>& sketches, int grid = kDefaultDedupGrid);

} // namespace sketchgen::dedup
