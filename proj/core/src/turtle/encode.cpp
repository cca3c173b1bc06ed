#include "sketchgen/turtle/encode.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "sketchgen/sketch/loops.hpp"
#include "sketchgen/util/random.hpp"

namespace sketchgen::turtle {

namespace {

using sketch::LoopCurve;
using sketch::SketchHypergraph;
using sketch::Vertex;

// One way of drawing a loop: the curves in order with orientation, plus
// the visited point sequence used for canonical comparisons.
struct Drawing {
    std::vector<LoopCurve> curves;
    std::vector<Vertex> points;
};

Drawing make_drawing(const SketchHypergraph& g, std::vector<LoopCurve> curves) {
    Drawing d;
    d.curves = std::move(curves);
    for (std::size_t i = 0; i < d.curves.size(); ++i) {
        const auto ids = sketch::curve_points(g, d.curves[i]);
        for (std::size_t k = i == 0 ? 0 : 1; k < ids.size(); ++k) {
            d.points.push_back(g.vertices[ids[k]]);
        }
    }
    return d;
}

// All drawings of a loop: every start position and both directions.
std::vector<Drawing> drawings_of(const SketchHypergraph& g, const sketch::Loop& loop) {
    std::vector<Drawing> out;
    const auto& curves = loop.curves;
    if (curves.size() == 1 && g.edges[curves[0].edge].vertex_ids.size() == 4) {
        // A circle is re-listed by rotating/reflecting its own point order.
        const auto& ids = g.edges[curves[0].edge].vertex_ids;
        for (int reflect = 0; reflect < 2; ++reflect) {
            for (std::size_t r = 0; r < 4; ++r) {
                Drawing d;
                d.curves = curves;
                for (std::size_t k = 0; k < 4; ++k) {
                    const std::size_t idx = reflect == 0 ? (r + k) % 4 : (r + 4 - k) % 4;
                    d.points.push_back(g.vertices[ids[idx]]);
                }
                out.push_back(std::move(d));
            }
        }
        return out;
    }
    const std::size_t n = curves.size();
    for (int reverse = 0; reverse < 2; ++reverse) {
        std::vector<LoopCurve> base = curves;
        if (reverse != 0) {
            std::reverse(base.begin(), base.end());
            for (auto& c : base) {
                c.reversed = !c.reversed;
            }
        }
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<LoopCurve> rotated;
            rotated.reserve(n);
            for (std::size_t k = 0; k < n; ++k) {
                rotated.push_back(base[(s + k) % n]);
            }
            out.push_back(make_drawing(g, std::move(rotated)));
        }
    }
    return out;
}

void emit(const SketchHypergraph& g, const Drawing& d, TurtleProgram& program) {
    const auto& pts = d.points;
    program.commands.push_back({CommandKind::loopstart, {Delta{pts[0].x, pts[0].y}}});
    auto delta = [](Vertex from, Vertex to) { return Delta{to.x - from.x, to.y - from.y}; };
    const bool circle = d.curves.size() == 1 && g.edges[d.curves[0].edge].vertex_ids.size() == 4;
    if (circle) {
        program.commands.push_back(
            {CommandKind::circle, {delta(pts[0], pts[1]), delta(pts[1], pts[2]), delta(pts[2], pts[3])}});
        return;
    }
    std::size_t at = 0;
    for (const auto& c : d.curves) {
        const auto count = g.edges[c.edge].vertex_ids.size() - 1;
        TurtleCommand cmd;
        cmd.kind = count == 1 ? CommandKind::line : CommandKind::arc;
        for (std::size_t k = 0; k < count; ++k) {
            cmd.deltas.push_back(delta(pts[at + k], pts[at + k + 1]));
        }
        at += count;
        program.commands.push_back(std::move(cmd));
    }
}

long long nearest_distance2(const Drawing& d) {
    long long best = -1;
    for (const auto& p : d.points) {
        const long long d2 = static_cast<long long>(p.x) * p.x + static_cast<long long>(p.y) * p.y;
        if (best < 0 || d2 < best) {
            best = d2;
        }
    }
    return best;
}

} // namespace

TurtleProgram encode(const sketch::SketchHypergraph& g, EncodeMode mode, std::uint64_t seed) {
    const auto decomposition = sketch::find_loops(g);
    if (!decomposition.open_chains.empty()) {
        std::size_t open_edges = 0;
        for (const auto& chain : decomposition.open_chains) {
            open_edges += chain.size();
        }
        throw EncodeError(std::to_string(open_edges) + " edge(s) lie on no closed loop");
    }

    std::vector<Drawing> chosen;
    chosen.reserve(decomposition.loops.size());
    if (mode == EncodeMode::canonical) {
        for (const auto& loop : decomposition.loops) {
            auto options = drawings_of(g, loop);
            // Starting vertex must be the smallest curve endpoint (circle: any
            // of its points); among those, the smallest visiting sequence wins.
            std::optional<Drawing> best;
            for (auto& d : options) {
                if (!best || d.points.front() < best->points.front() ||
                    (d.points.front() == best->points.front() && d.points < best->points)) {
                    best = std::move(d);
                }
            }
            chosen.push_back(std::move(*best));
        }
        std::stable_sort(chosen.begin(), chosen.end(), [](const Drawing& a, const Drawing& b) {
            const auto da = nearest_distance2(a), db = nearest_distance2(b);
            return da != db ? da < db : a.points < b.points;
        });
    } else {
        util::Rng rng(seed);
        for (const auto& loop : decomposition.loops) {
            auto options = drawings_of(g, loop);
            chosen.push_back(std::move(options[rng.uniform_int(options.size())]));
        }
        rng.shuffle(chosen);
    }

    TurtleProgram program;
    for (const auto& d : chosen) {
        emit(g, d, program);
    }
    if (program.commands.size() > kMaxCommands) {
        throw EncodeError("encoding needs " + std::to_string(program.commands.size()) + " commands; the limit is " +
                          std::to_string(kMaxCommands));
    }
    return program;
}

} // namespace sketchgen::turtle
