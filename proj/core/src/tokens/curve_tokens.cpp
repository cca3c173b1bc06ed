#include "sketchgen/tokens/curve_tokens.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sketchgen::tokens {

std::vector<std::size_t> canonical_curve(std::span<const std::size_t> pointers) {
    std::vector<std::size_t> seq(pointers.begin(), pointers.end());
    if (seq.size() == 4) {
        std::vector<std::size_t> best = seq;
        for (int reflect = 0; reflect < 2; ++reflect) {
            std::vector<std::size_t> base = seq;
            if (reflect != 0) {
                std::reverse(base.begin(), base.end());
            }
            for (std::size_t r = 0; r < base.size(); ++r) {
                std::vector<std::size_t> cand;
                for (std::size_t k = 0; k < base.size(); ++k) {
                    cand.push_back(base[(r + k) % base.size()]);
                }
                best = std::min(best, cand);
            }
        }
        return best;
    }
    std::vector<std::size_t> rev(seq.rbegin(), seq.rend());
    return std::min(seq, rev);
}

std::vector<sketch::Hyperedge> canonical_curves(std::span<const sketch::Hyperedge> edges) {
    std::vector<sketch::Hyperedge> out;
    out.reserve(edges.size());
    for (const auto& e : edges) {
        out.push_back({canonical_curve(e.vertex_ids)});
    }
    std::sort(out.begin(), out.end(), [](const sketch::Hyperedge& a, const sketch::Hyperedge& b) {
        const auto& pa = a.vertex_ids;
        const auto& pb = b.vertex_ids;
        const auto ma = pa.empty() ? 0 : *std::min_element(pa.begin(), pa.end());
        const auto mb = pb.empty() ? 0 : *std::min_element(pb.begin(), pb.end());
        if (ma != mb) return ma < mb;
        if (pa.size() != pb.size()) return pa.size() < pb.size();
        return pa < pb;
    });
    return out;
}

std::vector<int> encode_curves(const sketch::SketchHypergraph& sketch) {
    const auto n = sketch.vertices.size();
    std::vector<int> tokens;
    for (const auto& e : canonical_curves(sketch.edges)) {
        for (auto p : e.vertex_ids) {
            if (p >= n) {
                throw TokenError("edge points at vertex " + std::to_string(p) + " but only " + std::to_string(n) +
                                 " vertices exist");
            }
            tokens.push_back(static_cast<int>(p));
        }
        tokens.push_back(end_of_curve_token(n));
    }
    tokens.push_back(end_of_sketch_token(n));
    return tokens;
}

std::vector<sketch::Hyperedge> decode_curves(std::span<const int> tokens, std::size_t n) {
    const int eoc = end_of_curve_token(n);
    const int eos = end_of_sketch_token(n);
    std::vector<sketch::Hyperedge> edges;
    sketch::Hyperedge current;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const int t = tokens[i];
        if (t == eos) {
            if (!current.vertex_ids.empty()) {
                throw TokenError("curve not closed before end-of-sketch");
            }
            if (i + 1 != tokens.size()) {
                throw TokenError("curve sequence continues after end-of-sketch");
            }
            return edges;
        }
        if (t == eoc) {
            const auto size = current.vertex_ids.size();
            if (size == 0) {
                throw TokenError("empty curve at position " + std::to_string(i));
            }
            if (size < 2 || size > 4) {
                throw TokenError("curve with " + std::to_string(size) + " vertices at position " +
                                 std::to_string(i));
            }
            std::set<std::size_t> distinct(current.vertex_ids.begin(), current.vertex_ids.end());
            if (distinct.size() != size) {
                throw TokenError("curve repeats a vertex at position " + std::to_string(i));
            }
            edges.push_back(std::move(current));
            current = {};
            continue;
        }
        if (t < 0 || t > eos) {
            throw TokenError("curve token " + std::to_string(t) + " is outside the vocabulary");
        }
        current.vertex_ids.push_back(static_cast<std::size_t>(t));
    }
    throw TokenError("curve sequence has no end-of-sketch token");
}

std::vector<sketch::Hyperedge> decode_curves_lenient(std::span<const int> tokens, std::size_t n) {
    const int eoc = end_of_curve_token(n);
    const int eos = end_of_sketch_token(n);
    std::vector<sketch::Hyperedge> edges;
    sketch::Hyperedge current;
    for (const int t : tokens) {
        if (t == eos || t == eoc) {
            if (!current.vertex_ids.empty()) {
                edges.push_back(std::move(current));
                current = {};
            }
            if (t == eos) {
                break;
            }
            continue;
        }
        if (t >= 0 && t < eoc) {
            current.vertex_ids.push_back(static_cast<std::size_t>(t));
        }
    }
    if (!current.vertex_ids.empty()) {
        edges.push_back(std::move(current));
    }
    return edges;
}

} // namespace sketchgen::tokens
