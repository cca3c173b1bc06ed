#include "sketchgen/solid/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sketchgen/sketch/geometry.hpp"
#include "sketchgen/sketch/validate.hpp"

namespace sketchgen::solid {

using sketch::Point2;

namespace {

constexpr double kEps = 1e-9;

int segments_for(double sweep, int per_turn) {
    const int n = static_cast<int>(std::ceil(std::abs(sweep) / (2.0 * std::numbers::pi) * per_turn - 1e-9));
    return std::max(n, kMinCurveSegments);
}

double cross(Point2 o, Point2 a, Point2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool on_segment(Point2 p, Point2 a, Point2 b) {
    return std::min(a.x, b.x) - kEps <= p.x && p.x <= std::max(a.x, b.x) + kEps &&
           std::min(a.y, b.y) - kEps <= p.y && p.y <= std::max(a.y, b.y) + kEps;
}

int sign(double v) { return v > kEps ? 1 : (v < -kEps ? -1 : 0); }

// Closed-segment intersection, touching included.
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
    const int d1 = sign(cross(c, d, a));
    const int d2 = sign(cross(c, d, b));
    const int d3 = sign(cross(a, b, c));
    const int d4 = sign(cross(a, b, d));
    if (d1 * d2 < 0 && d3 * d4 < 0) {
        return true;
    }
    return (d1 == 0 && on_segment(a, c, d)) || (d2 == 0 && on_segment(b, c, d)) ||
           (d3 == 0 && on_segment(c, a, b)) || (d4 == 0 && on_segment(d, a, b));
}

bool self_intersects(const std::vector<Point2>& poly) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) {
                continue;
            }
            if (segments_intersect(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n])) {
                return true;
            }
        }
    }
    return false;
}

bool polygons_intersect(const std::vector<Point2>& p, const std::vector<Point2>& q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (segments_intersect(p[i], p[(i + 1) % p.size()], q[j], q[(j + 1) % q.size()])) {
                return true;
            }
        }
    }
    return false;
}

void append_arc(std::vector<Point2>& out, Point2 center, double radius, Point2 start, double a0, double sweep,
                int per_turn) {
    const int n = segments_for(sweep, per_turn);
    out.push_back(start);
    for (int i = 1; i < n; ++i) {
        const double a = a0 + sweep * i / n;
        out.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
    }
}

sketch::Loop reversed_loop(const sketch::Loop& loop) {
    sketch::Loop out;
    for (auto it = loop.curves.rbegin(); it != loop.curves.rend(); ++it) {
        out.curves.push_back({it->edge, !it->reversed});
    }
    return out;
}

} // namespace

double signed_area(const std::vector<Point2>& polygon) {
    double a = 0.0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const auto& p = polygon[i];
        const auto& q = polygon[(i + 1) % polygon.size()];
        a += p.x * q.y - q.x * p.y;
    }
    return 0.5 * a;
}

bool point_in_polygon(Point2 p, const std::vector<Point2>& polygon) {
    bool inside = false;
    for (std::size_t i = 0, j = polygon.size() - 1; i < polygon.size(); j = i++) {
        const auto& a = polygon[i];
        const auto& b = polygon[j];
        if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) {
            inside = !inside;
        }
    }
    return inside;
}

std::vector<Point2> tessellate_loop(const sketch::SketchHypergraph& g, const sketch::Loop& loop,
                                    int segments_per_turn) {
    std::vector<Point2> out;
    for (const auto& curve : loop.curves) {
        const auto prim = sketch::recover_primitive(g.edges[curve.edge], g.vertices);
        const auto ids = sketch::curve_points(g, curve);
        const Point2 start = sketch::to_point(g.vertices[ids.front()]);
        if (std::holds_alternative<sketch::Line>(prim)) {
            out.push_back(start);
        } else if (const auto* arc = std::get_if<sketch::Arc>(&prim)) {
            const double sweep = curve.reversed ? -arc->sweep : arc->sweep;
            append_arc(out, arc->center, arc->radius, start, sketch::polar_angle(arc->center, start), sweep,
                       segments_per_turn);
        } else {
            const auto& circle = std::get<sketch::Circle>(prim);
            std::vector<Point2> quad;
            for (auto id : ids) {
                quad.push_back(sketch::to_point(g.vertices[id]));
            }
            const double dir = signed_area(quad) >= 0.0 ? 1.0 : -1.0;
            append_arc(out, circle.center, circle.radius, start, sketch::polar_angle(circle.center, start),
                       dir * 2.0 * std::numbers::pi, segments_per_turn);
        }
    }
    return out;
}

ProfileSet build_profiles(const sketch::SketchHypergraph& g, int segments_per_turn) {
    if (segments_per_turn < 3) {
        throw ProfileError("tessellation needs at least 3 segments per turn");
    }
    if (!sketch::is_valid(g)) {
        throw ProfileError("sketch is not valid");
    }
    const auto decomposition = sketch::find_loops(g);
    ProfileSet result;
    result.open_chains = decomposition.open_chains;

    std::vector<ProfileLoop> loops;
    for (const auto& loop : decomposition.loops) {
        ProfileLoop pl{loop, tessellate_loop(g, loop, segments_per_turn)};
        if (pl.polygon.size() < 3 || std::abs(signed_area(pl.polygon)) <= kEps) {
            throw ProfileError("loop encloses no area");
        }
        if (self_intersects(pl.polygon)) {
            throw ProfileError("loop intersects itself");
        }
        loops.push_back(std::move(pl));
    }
    for (std::size_t i = 0; i < loops.size(); ++i) {
        for (std::size_t j = i + 1; j < loops.size(); ++j) {
            if (polygons_intersect(loops[i].polygon, loops[j].polygon)) {
                throw ProfileError("loops touch or intersect");
            }
        }
    }

    // contains[i][j]: loop j lies inside loop i
    const std::size_t n = loops.size();
    std::vector<int> depth(n, 0);
    std::vector<std::ptrdiff_t> parent(n, -1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i != j && point_in_polygon(loops[j].polygon.front(), loops[i].polygon)) {
                ++depth[j];
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i != j && depth[i] == depth[j] - 1 && point_in_polygon(loops[j].polygon.front(), loops[i].polygon)) {
                parent[j] = static_cast<std::ptrdiff_t>(i);
            }
        }
    }

    std::vector<std::ptrdiff_t> profile_of(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        auto& pl = loops[i];
        const bool outer = depth[i] % 2 == 0;
        const double area = signed_area(pl.polygon);
        if ((outer && area < 0.0) || (!outer && area > 0.0)) {
            std::reverse(pl.polygon.begin() + 1, pl.polygon.end());
            pl.loop = reversed_loop(pl.loop);
        }
        if (outer) {
            profile_of[i] = static_cast<std::ptrdiff_t>(result.profiles.size());
            result.profiles.push_back({pl, {}});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (depth[i] % 2 == 1) {
            result.profiles[static_cast<std::size_t>(profile_of[static_cast<std::size_t>(parent[i])])].holes.push_back(
                loops[i]);
        }
    }
    return result;
}

} // namespace sketchgen::solid
