#include "sketchgen/tokens/vertex_tokens.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sketchgen::tokens {

namespace {

bool yx_less(const sketch::Vertex& a, const sketch::Vertex& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
}

} // namespace

std::vector<int> encode_vertices(std::span<const sketch::Vertex> vertices) {
    std::vector<sketch::Vertex> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end(), yx_less);
    std::vector<int> tokens;
    tokens.reserve(2 * sorted.size() + 1);
    for (const auto& v : sorted) {
        tokens.push_back(v.y);
        tokens.push_back(v.x);
    }
    tokens.push_back(kVertexStopToken);
    return tokens;
}

std::vector<int> encode_vertices(const sketch::SketchHypergraph& sketch) { return encode_vertices(sketch.vertices); }

std::vector<sketch::Vertex> decode_vertices(std::span<const int> tokens) {
    std::vector<sketch::Vertex> out;
    std::size_t i = 0;
    for (; i < tokens.size() && tokens[i] != kVertexStopToken; ++i) {
        if (tokens[i] < 0 || tokens[i] > sketch::kGridMax) {
            throw TokenError("vertex token " + std::to_string(tokens[i]) + " at position " + std::to_string(i) +
                             " is outside the vocabulary");
        }
    }
    if (i == tokens.size()) {
        throw TokenError("vertex sequence has no stop token");
    }
    if (i + 1 != tokens.size()) {
        throw TokenError("vertex sequence continues after the stop token");
    }
    if (i % 2 != 0) {
        throw TokenError("vertex sequence ends with a dangling half pair");
    }
    out.reserve(i / 2);
    for (std::size_t k = 0; k < i; k += 2) {
        out.push_back({tokens[k + 1], tokens[k]});
    }
    return out;
}

std::vector<sketch::Vertex> decode_vertices_lenient(std::span<const int> tokens) {
    std::vector<sketch::Vertex> out;
    for (std::size_t k = 0; k + 1 < tokens.size(); k += 2) {
        if (tokens[k] == kVertexStopToken || tokens[k + 1] == kVertexStopToken) {
            break;
        }
        out.push_back({std::clamp(tokens[k + 1], 0, sketch::kGridMax), std::clamp(tokens[k], 0, sketch::kGridMax)});
    }
    return out;
}

sketch::SketchHypergraph sort_vertices(const sketch::SketchHypergraph& g) {
    std::vector<std::size_t> order(g.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return yx_less(g.vertices[a], g.vertices[b]); });
    std::vector<std::size_t> new_index(order.size());
    sketch::SketchHypergraph out;
    out.vertices.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        new_index[order[i]] = i;
        out.vertices.push_back(g.vertices[order[i]]);
    }
    out.edges.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        sketch::Hyperedge mapped;
        for (auto id : e.vertex_ids) {
            mapped.vertex_ids.push_back(id < new_index.size() ? new_index[id] : id);
        }
        out.edges.push_back(std::move(mapped));
    }
    return out;
}

} // namespace sketchgen::tokens
