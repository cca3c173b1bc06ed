#include "sketchgen/sketch/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "sketchgen/util/error.hpp"

namespace sketchgen::sketch {

namespace {

SketchHypergraph merge_into(std::vector<Vertex> cells, const std::vector<Hyperedge>& edges) {
    SketchHypergraph out;
    std::map<Vertex, std::size_t> slot;
    std::vector<std::size_t> remap(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto [it, inserted] = slot.try_emplace(cells[i], out.vertices.size());
        if (inserted) {
            out.vertices.push_back(cells[i]);
        }
        remap[i] = it->second;
    }
    out.edges.reserve(edges.size());
    for (const auto& e : edges) {
        Hyperedge mapped;
        mapped.vertex_ids.reserve(e.vertex_ids.size());
        for (auto id : e.vertex_ids) {
            if (id >= remap.size()) {
                throw InputError("edge references vertex " + std::to_string(id) + " out of range");
            }
            mapped.vertex_ids.push_back(remap[id]);
        }
        out.edges.push_back(std::move(mapped));
    }
    return out;
}

} // namespace

SketchHypergraph quantize_sketch(const RawSketch& raw, int grid_size) {
    if (grid_size < 2 || grid_size > kGridSize) {
        throw InputError("grid size must be in [2, 256]");
    }
    if (raw.vertices.empty()) {
        throw InputError("quantize_sketch: no vertices");
    }
    double min_x = raw.vertices.front().x, max_x = min_x;
    double min_y = raw.vertices.front().y, max_y = min_y;
    for (const auto& p : raw.vertices) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw InputError("quantize_sketch: non-finite coordinate");
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double span_x = max_x - min_x;
    const double span_y = max_y - min_y;
    const double extent = std::max(span_x, span_y);
    if (!(extent > 0.0)) {
        throw DegenerateGeometry("quantize_sketch: all vertices coincide");
    }
    const double target = static_cast<double>(grid_size - 1);
    const double scale = target / extent;
    const double offset_x = 0.5 * (target - span_x * scale);
    const double offset_y = 0.5 * (target - span_y * scale);

    std::vector<Vertex> cells;
    cells.reserve(raw.vertices.size());
    for (const auto& p : raw.vertices) {
        const double x = (p.x - min_x) * scale + offset_x;
        const double y = (p.y - min_y) * scale + offset_y;
        cells.push_back({std::clamp(static_cast<int>(std::round(x)), 0, grid_size - 1),
                         std::clamp(static_cast<int>(std::round(y)), 0, grid_size - 1)});
    }
    return merge_into(std::move(cells), raw.edges);
}

SketchHypergraph merge_duplicate_vertices(const SketchHypergraph& sketch) {
    return merge_into(sketch.vertices, sketch.edges);
}

} // namespace sketchgen::sketch
