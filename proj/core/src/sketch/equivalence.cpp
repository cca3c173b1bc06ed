#include "sketchgen/sketch/equivalence.hpp"

#include <algorithm>

namespace sketchgen::sketch {

std::vector<Vertex> canonical_edge(const SketchHypergraph& sketch, std::size_t edge) {
    std::vector<Vertex> seq;
    for (auto id : sketch.edges[edge].vertex_ids) {
        if (id < sketch.vertices.size()) {
            seq.push_back(sketch.vertices[id]);
        }
    }
    if (seq.size() == 4) {
        // Circle: any rotation or reflection of the drawing order.
        std::vector<Vertex> best = seq;
        for (int reflect = 0; reflect < 2; ++reflect) {
            std::vector<Vertex> base = seq;
            if (reflect != 0) {
                std::reverse(base.begin(), base.end());
            }
            for (std::size_t r = 0; r < base.size(); ++r) {
                std::vector<Vertex> cand(base.begin() + static_cast<std::ptrdiff_t>(r), base.end());
                cand.insert(cand.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(r));
                best = std::min(best, cand);
            }
        }
        return best;
    }
    std::vector<Vertex> rev(seq.rbegin(), seq.rend());
    return std::min(seq, rev);
}

CanonicalSketch canonical_form(const SketchHypergraph& sketch) {
    CanonicalSketch out;
    out.vertices = sketch.vertices;
    std::sort(out.vertices.begin(), out.vertices.end());
    out.edges.reserve(sketch.edges.size());
    for (std::size_t e = 0; e < sketch.edges.size(); ++e) {
        out.edges.push_back(canonical_edge(sketch, e));
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

bool isomorphic(const SketchHypergraph& a, const SketchHypergraph& b) { return canonical_form(a) == canonical_form(b); }

} // namespace sketchgen::sketch
