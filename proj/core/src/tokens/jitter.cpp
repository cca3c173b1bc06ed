#include "sketchgen/tokens/jitter.hpp"

#include <algorithm>
#include <cmath>

#include "sketchgen/util/random.hpp"

namespace sketchgen::tokens {

namespace {

// Draw from N(0, sigma^2) restricted to [lo, hi] by rejection. lo <= 0 <= hi.
double truncated_normal(util::Rng& rng, double sigma, double lo, double hi) {
    if (hi - lo <= 0.0) {
        return 0.0;
    }
    for (;;) {
        const double z = sigma * rng.normal();
        if (z >= lo && z <= hi) {
            return z;
        }
    }
}

} // namespace

std::vector<sketch::Point2> jitter(const sketch::SketchHypergraph& g, std::uint64_t seed, double variance) {
    std::vector<sketch::Point2> out;
    if (g.vertices.empty()) {
        return out;
    }
    int min_x = g.vertices[0].x, max_x = min_x, min_y = g.vertices[0].y, max_y = min_y;
    for (const auto& v : g.vertices) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    const double sigma = std::sqrt(variance);
    util::Rng rng(seed);
    out.reserve(g.vertices.size());
    for (const auto& v : g.vertices) {
        const double dx = truncated_normal(rng, sigma, min_x - v.x, max_x - v.x);
        const double dy = truncated_normal(rng, sigma, min_y - v.y, max_y - v.y);
        out.push_back({v.x + dx, v.y + dy});
    }
    return out;
}

sketch::SketchHypergraph jitter_quantized(const sketch::SketchHypergraph& g, std::uint64_t seed, double variance) {
    sketch::SketchHypergraph out = g;
    const auto moved = jitter(g, seed, variance);
    for (std::size_t i = 0; i < moved.size(); ++i) {
        out.vertices[i] = {static_cast<int>(std::round(moved[i].x)), static_cast<int>(std::round(moved[i].y))};
    }
    return out;
}

} // namespace sketchgen::tokens
