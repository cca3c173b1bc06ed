#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace sketchgen::testing {

using sketch::Hyperedge;
using sketch::SketchHypergraph;
using sketch::Vertex;

SketchHypergraph rectangle(int x0, int y0, int x1, int y1) {
    return {{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, {{{0, 1}}, {{1, 2}}, {{2, 3}}, {{3, 0}}}};
}

SketchHypergraph circle(int cx, int cy, int r) {
    return {{{cx + r, cy}, {cx, cy + r}, {cx - r, cy}, {cx, cy - r}}, {{{0, 1, 2, 3}}}};
}

SketchHypergraph combine(const std::vector<SketchHypergraph>& parts) {
    SketchHypergraph out;
    for (const auto& p : parts) {
        const std::size_t base = out.vertices.size();
        out.vertices.insert(out.vertices.end(), p.vertices.begin(), p.vertices.end());
        for (auto e : p.edges) {
            for (auto& id : e.vertex_ids) {
                id += base;
            }
            out.edges.push_back(std::move(e));
        }
    }
    return out;
}

namespace {

int uniform(util::Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(hi - lo + 1))); }

bool random_polygon(util::Rng& rng, int ox, int oy, SketchHypergraph& out) {
    const int n = uniform(rng, 3, 6);
    const int r = uniform(rng, 15, 50);
    const int cx = uniform(rng, ox + 10 + r, ox + 117 - r);
    const int cy = uniform(rng, oy + 10 + r, oy + 117 - r);
    std::vector<Vertex> pts;
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * std::numbers::pi * (i + 0.6 * (rng.uniform01() - 0.5)) / n;
        pts.push_back({static_cast<int>(std::lround(cx + r * std::cos(t))),
                       static_cast<int>(std::lround(cy + r * std::sin(t)))});
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j]) {
                return false;
            }
        }
    }
    SketchHypergraph g;
    g.vertices = pts;
    const bool with_arc = rng.coin();
    const std::size_t arc_side = rng.uniform_int(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::size_t j = (i + 1) % pts.size();
        if (with_arc && i == arc_side) {
            const Vertex a = pts[i], b = pts[j];
            const double dx = b.x - a.x, dy = b.y - a.y;
            const double len = std::hypot(dx, dy);
            const double h = 2.0 + rng.uniform01() * 0.45 * len;
            const Vertex m{static_cast<int>(std::lround(0.5 * (a.x + b.x) + h * dy / len)),
                           static_cast<int>(std::lround(0.5 * (a.y + b.y) - h * dx / len))};
            const long cross = static_cast<long>(b.x - a.x) * (m.y - a.y) - static_cast<long>(b.y - a.y) * (m.x - a.x);
            const bool inside = m.x >= ox + 2 && m.x <= ox + 125 && m.y >= oy + 2 && m.y <= oy + 125;
            if (cross == 0 || !inside || std::find(pts.begin(), pts.end(), m) != pts.end()) {
                return false;
            }
            g.vertices.push_back(m);
            g.edges.push_back({{i, g.vertices.size() - 1, j}});
        } else {
            g.edges.push_back({{i, j}});
        }
    }
    out = g;
    return true;
}

} // namespace

SketchHypergraph random_sketch(util::Rng& rng) {
    std::vector<std::pair<int, int>> quadrants{{0, 0}, {128, 0}, {0, 128}, {128, 128}};
    rng.shuffle(quadrants);
    const int shapes = uniform(rng, 1, 3);
    std::vector<SketchHypergraph> parts;
    for (int s = 0; s < shapes; ++s) {
        const auto [ox, oy] = quadrants[static_cast<std::size_t>(s)];
        if (rng.uniform01() < 0.3) {
            const int r = uniform(rng, 5, 50);
            parts.push_back(circle(uniform(rng, ox + 10 + r, ox + 117 - r), uniform(rng, oy + 10 + r, oy + 117 - r), r));
            continue;
        }
        SketchHypergraph poly;
        while (!random_polygon(rng, ox, oy, poly)) {
        }
        parts.push_back(poly);
    }
    return shuffled(combine(parts), rng);
}

turtle::TurtleProgram random_program(util::Rng& rng) {
    turtle::TurtleProgram p;
    const int loops = uniform(rng, 1, 4);
    auto delta = [&] { return turtle::Delta{uniform(rng, -255, 255), uniform(rng, -255, 255)}; };
    for (int l = 0; l < loops; ++l) {
        p.commands.push_back({turtle::CommandKind::loopstart, {delta()}});
        const int draws = uniform(rng, 1, 8);
        for (int d = 0; d < draws; ++d) {
            const auto kind = static_cast<turtle::CommandKind>(uniform(rng, 1, 3));
            turtle::TurtleCommand cmd{kind, {}};
            for (std::size_t k = 0; k < turtle::arity(kind); ++k) {
                cmd.deltas.push_back(delta());
            }
            p.commands.push_back(std::move(cmd));
        }
    }
    return p;
}

SketchHypergraph shuffled(const SketchHypergraph& g, util::Rng& rng) {
    std::vector<std::size_t> perm(g.vertices.size());
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    SketchHypergraph out;
    out.vertices.resize(g.vertices.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out.vertices[perm[i]] = g.vertices[i];
    }
    for (const auto& e : g.edges) {
        Hyperedge ne;
        for (auto id : e.vertex_ids) {
            ne.vertex_ids.push_back(perm[id]);
        }
        auto& ids = ne.vertex_ids;
        if (ids.size() == 4) {
            std::rotate(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(rng.uniform_int(4)), ids.end());
        }
        if (rng.coin()) {
            std::reverse(ids.begin(), ids.end());
        }
        out.edges.push_back(std::move(ne));
    }
    rng.shuffle(out.edges);
    return out;
}

SketchHypergraph translated(const SketchHypergraph& g, int dx, int dy) {
    SketchHypergraph out = g;
    for (auto& v : out.vertices) {
        v.x += dx;
        v.y += dy;
    }
    return out;
}

SketchHypergraph scaled(const SketchHypergraph& g, int factor) {
    SketchHypergraph out = g;
    for (auto& v : out.vertices) {
        v.x *= factor;
        v.y *= factor;
    }
    return out;
}

} // namespace sketchgen::testing
