#include "sketchgen/dedup/dedup.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <variant>

#include "sketchgen/sketch/geometry.hpp"
#include "sketchgen/sketch/validate.hpp"
#include "sketchgen/util/error.hpp"

namespace sketchgen::dedup {

namespace {

using sketch::SketchHypergraph;

// Guards floor() against round-off when a value lands on a cell boundary.
constexpr double kBoundaryEpsilon = 1e-9;

struct Frame {
    int min_x = 0;
    int min_y = 0;
    long long extent = 0;
    int grid = kDefaultDedupGrid;

    // Integer arithmetic keeps vertex cells exactly invariant under integer
    // scaling and translation.
    Cell cell(const sketch::Vertex& v) const {
        return {clamp_cell(static_cast<long long>(v.x - min_x) * grid / extent),
                clamp_cell(static_cast<long long>(v.y - min_y) * grid / extent)};
    }

    Cell cell(const sketch::Point2& p) const {
        return {clamp_cell(quantize(p.x - min_x)), clamp_cell(quantize(p.y - min_y))};
    }

    int radius(double r) const { return static_cast<int>(std::max(0LL, quantize(r))); }

    long long quantize(double length) const {
        return static_cast<long long>(std::floor(length * grid / static_cast<double>(extent) + kBoundaryEpsilon));
    }

    int clamp_cell(long long c) const { return static_cast<int>(std::clamp<long long>(c, 0, grid - 1)); }
};

std::optional<Frame> frame_of(const SketchHypergraph& g, int grid) {
    if (g.vertices.empty()) {
        return std::nullopt;
    }
    int min_x = g.vertices[0].x, max_x = min_x, min_y = g.vertices[0].y, max_y = min_y;
    for (const auto& v : g.vertices) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    const long long extent = std::max(max_x - min_x, max_y - min_y);
    if (extent == 0) {
        return std::nullopt;
    }
    return Frame{min_x, min_y, extent, grid};
}

EdgeSignature raw_signature(const SketchHypergraph& g, const sketch::Hyperedge& e, const Frame& f) {
    EdgeSignature sig;
    sig.kind = SignatureKind::raw;
    for (auto id : e.vertex_ids) {
        if (id < g.vertices.size()) {
            sig.cells.push_back(f.cell(g.vertices[id]));
        }
    }
    std::sort(sig.cells.begin(), sig.cells.end());
    sig.radius = static_cast<int>(e.vertex_ids.size());
    return sig;
}

EdgeSignature signature(const SketchHypergraph& g, const sketch::Hyperedge& e, const Frame& f) {
    sketch::CurvePrimitive prim;
    try {
        prim = sketch::recover_primitive(e, g.vertices);
    } catch (const sketch::CurveRecoveryError&) {
        return raw_signature(g, e, f);
    }
    EdgeSignature sig;
    const auto& ids = e.vertex_ids;
    if (std::holds_alternative<sketch::Line>(prim)) {
        sig.kind = SignatureKind::line;
        sig.cells = {f.cell(g.vertices[ids.front()]), f.cell(g.vertices[ids.back()])};
        std::sort(sig.cells.begin(), sig.cells.end());
    } else if (const auto* arc = std::get_if<sketch::Arc>(&prim)) {
        sig.kind = SignatureKind::arc;
        sig.cells = {f.cell(g.vertices[ids.front()]), f.cell(g.vertices[ids.back()])};
        std::sort(sig.cells.begin(), sig.cells.end());
        sig.radius = f.radius(arc->radius);
    } else {
        const auto& circle = std::get<sketch::Circle>(prim);
        sig.kind = SignatureKind::circle;
        sig.cells = {f.cell(circle.center)};
        sig.radius = f.radius(circle.radius);
    }
    return sig;
}

DedupKey key_in_frame(const SketchHypergraph& g, const Frame& f) {
    DedupKey key;
    key.edges.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        key.edges.push_back(signature(g, e, f));
    }
    std::sort(key.edges.begin(), key.edges.end());
    return key;
}

} // namespace

DedupKey dedup_key(const SketchHypergraph& g, int grid) {
    if (grid < 1) {
        throw InputError("dedup grid must be positive");
    }
    const auto frame = frame_of(g, grid);
    if (!frame) {
        throw DegenerateGeometry("dedup_key: sketch has zero extent");
    }
    return key_in_frame(g, *frame);
}

DedupKey dedup_key_lenient(const SketchHypergraph& g, int grid) {
    if (grid < 1) {
        throw InputError("dedup grid must be positive");
    }
    const auto frame = frame_of(g, grid);
    if (!frame) {
        DedupKey key;
        key.degenerate = true;
        key.vertex_count = g.vertices.empty() ? 0 : 1;
        for (const auto& e : g.edges) {
            EdgeSignature sig;
            sig.kind = SignatureKind::raw;
            sig.radius = static_cast<int>(e.vertex_ids.size());
            key.edges.push_back(sig);
        }
        std::sort(key.edges.begin(), key.edges.end());
        return key;
    }
    return key_in_frame(g, *frame);
}

bool is_duplicate(const SketchHypergraph& a, const SketchHypergraph& b, int grid) {
    return dedup_key(a, grid) == dedup_key(b, grid);
}

FilterResult filter_dataset(const std::vector<SketchHypergraph>& sketches, int grid) {
    FilterResult result;
    std::set<DedupKey> seen;
    for (const auto& s : sketches) {
        ++result.stats.total;
        if (!sketch::is_valid(s)) {
            ++result.stats.invalid;
            continue;
        }
        if (!seen.insert(dedup_key(s, grid)).second) {
            ++result.stats.duplicates;
            continue;
        }
        result.kept.push_back(s);
    }
    result.stats.kept = result.kept.size();
    return result;
}

} // namespace sketchgen::dedup
