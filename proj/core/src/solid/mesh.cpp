#include "sketchgen/solid/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace sketchgen::solid {

using sketch::Point2;

namespace {

double cross(Point2 o, Point2 a, Point2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool in_triangle(Point2 p, Point2 a, Point2 b, Point2 c) {
    constexpr double eps = 1e-12;
    return cross(a, b, p) >= -eps && cross(b, c, p) >= -eps && cross(c, a, p) >= -eps;
}

struct Ring {
    std::vector<std::size_t> ids;
};

// Splices `hole` into `ring` through a mutually visible vertex pair.
void bridge(Ring& ring, const std::vector<std::size_t>& hole, const std::vector<Point2>& pts) {
    std::size_t m = 0;
    for (std::size_t i = 1; i < hole.size(); ++i) {
        const auto& a = pts[hole[i]];
        const auto& b = pts[hole[m]];
        if (a.x > b.x || (a.x == b.x && a.y < b.y)) {
            m = i;
        }
    }
    const Point2 mp = pts[hole[m]];

    // nearest boundary crossing of the ray from mp towards +x
    double best_x = std::numeric_limits<double>::infinity();
    std::ptrdiff_t best_edge = -1;
    const std::size_t n = ring.ids.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = pts[ring.ids[i]];
        const Point2 b = pts[ring.ids[(i + 1) % n]];
        if ((a.y > mp.y) == (b.y > mp.y) && a.y != mp.y && b.y != mp.y) {
            continue;
        }
        if (a.y == b.y) {
            if (a.y == mp.y) {
                const double x = std::min(a.x, b.x);
                if (x >= mp.x && x < best_x) {
                    best_x = x;
                    best_edge = static_cast<std::ptrdiff_t>(i);
                }
            }
            continue;
        }
        const double t = (mp.y - a.y) / (b.y - a.y);
        if (t < 0.0 || t > 1.0) {
            continue;
        }
        const double x = a.x + t * (b.x - a.x);
        if (x >= mp.x && x < best_x) {
            best_x = x;
            best_edge = static_cast<std::ptrdiff_t>(i);
        }
    }
    if (best_edge < 0) {
        throw ProfileError("hole is not inside its outer loop");
    }
    const auto ea = static_cast<std::size_t>(best_edge);
    const auto eb = (ea + 1) % n;
    const Point2 hit{best_x, mp.y};
    std::size_t candidate = pts[ring.ids[ea]].x >= pts[ring.ids[eb]].x ? ea : eb;
    for (auto e : {ea, eb}) {
        if (pts[ring.ids[e]].x == hit.x && pts[ring.ids[e]].y == hit.y) {
            candidate = e;
        }
    }
    const Point2 cp = pts[ring.ids[candidate]];
    if (!(cp.x == hit.x && cp.y == hit.y)) {
        // a reflex vertex inside triangle (mp, hit, cp) would block the
        // bridge; take the one with the smallest angle to the ray
        double best_angle = std::numeric_limits<double>::infinity();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 p = pts[ring.ids[i]];
            const Point2 prev = pts[ring.ids[(i + n - 1) % n]];
            const Point2 next = pts[ring.ids[(i + 1) % n]];
            if (i == candidate || cross(prev, p, next) > 0.0) {
                continue;
            }
            const bool inside = cp.y >= mp.y ? in_triangle(p, mp, hit, cp) : in_triangle(p, mp, cp, hit);
            if (!inside || p.x < mp.x) {
                continue;
            }
            const double angle = std::atan2(std::abs(p.y - mp.y), p.x - mp.x);
            const double dist = std::hypot(p.x - mp.x, p.y - mp.y);
            if (angle < best_angle || (angle == best_angle && dist < best_dist)) {
                best_angle = angle;
                best_dist = dist;
                candidate = i;
            }
        }
    }

    std::vector<std::size_t> merged;
    merged.reserve(n + hole.size() + 2);
    for (std::size_t i = 0; i <= candidate; ++i) {
        merged.push_back(ring.ids[i]);
    }
    for (std::size_t k = 0; k <= hole.size(); ++k) {
        merged.push_back(hole[(m + k) % hole.size()]);
    }
    merged.push_back(ring.ids[candidate]);
    for (std::size_t i = candidate + 1; i < n; ++i) {
        merged.push_back(ring.ids[i]);
    }
    ring.ids = std::move(merged);
}

bool is_ear(const std::vector<std::size_t>& ring, std::size_t i, const std::vector<Point2>& pts, bool strict) {
    const std::size_t n = ring.size();
    const std::size_t ia = ring[(i + n - 1) % n], ib = ring[i], ic = ring[(i + 1) % n];
    const Point2 a = pts[ia], b = pts[ib], c = pts[ic];
    const double turn = cross(a, b, c);
    if (strict ? turn <= 1e-12 : turn < -1e-12) {
        return false;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t id = ring[k];
        if (id == ia || id == ib || id == ic) {
            continue;
        }
        const Point2 p = pts[id];
        if ((p.x == a.x && p.y == a.y) || (p.x == b.x && p.y == b.y) || (p.x == c.x && p.y == c.y)) {
            continue;
        }
        if (in_triangle(p, a, b, c)) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<std::array<std::size_t, 3>> triangulate(const std::vector<Point2>& outer,
                                                    const std::vector<std::vector<Point2>>& holes) {
    std::vector<Point2> pts(outer);
    Ring ring;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        ring.ids.push_back(i);
    }
    std::vector<std::vector<std::size_t>> hole_ids;
    for (const auto& h : holes) {
        std::vector<std::size_t> ids;
        for (const auto& p : h) {
            ids.push_back(pts.size());
            pts.push_back(p);
        }
        hole_ids.push_back(std::move(ids));
    }
    // rightmost holes first so that later bridges see earlier ones
    std::vector<std::size_t> order(hole_ids.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    auto max_x = [&](std::size_t h) {
        double x = -std::numeric_limits<double>::infinity();
        for (auto id : hole_ids[h]) {
            x = std::max(x, pts[id].x);
        }
        return x;
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return max_x(a) > max_x(b); });
    for (auto h : order) {
        bridge(ring, hole_ids[h], pts);
    }

    std::vector<std::array<std::size_t, 3>> tris;
    auto& r = ring.ids;
    while (r.size() > 3) {
        bool clipped = false;
        for (int pass = 0; pass < 2 && !clipped; ++pass) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (is_ear(r, i, pts, pass == 0)) {
                    const std::size_t n = r.size();
                    tris.push_back({r[(i + n - 1) % n], r[i], r[(i + 1) % n]});
                    r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
                    clipped = true;
                    break;
                }
            }
        }
        if (!clipped) {
            throw ProfileError("ear clipping found no ear");
        }
    }
    if (r.size() == 3) {
        tris.push_back({r[0], r[1], r[2]});
    }
    return tris;
}

SolidMesh extrude(const Profile& profile, double height) {
    if (!(height > 0.0)) {
        throw std::invalid_argument("extrusion height must be positive");
    }
    std::vector<std::vector<Point2>> holes;
    for (const auto& h : profile.holes) {
        holes.push_back(h.polygon);
    }
    const auto cap = triangulate(profile.outer.polygon, holes);

    std::vector<const std::vector<Point2>*> rings{&profile.outer.polygon};
    for (const auto& h : holes) {
        rings.push_back(&h);
    }
    std::vector<Point2> flat;
    for (const auto* ring : rings) {
        flat.insert(flat.end(), ring->begin(), ring->end());
    }
    const std::size_t n = flat.size();
    SolidMesh mesh;
    for (const auto& p : flat) {
        mesh.vertices.push_back({p.x, p.y, 0.0});
    }
    for (const auto& p : flat) {
        mesh.vertices.push_back({p.x, p.y, height});
    }
    for (const auto& t : cap) {
        mesh.triangles.push_back({t[0], t[2], t[1]});
        mesh.triangles.push_back({t[0] + n, t[1] + n, t[2] + n});
    }
    std::size_t base = 0;
    for (const auto* ring : rings) {
        const std::size_t m = ring->size();
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t a0 = base + i;
            const std::size_t b0 = base + (i + 1) % m;
            mesh.triangles.push_back({a0, b0, b0 + n});
            mesh.triangles.push_back({a0, b0 + n, a0 + n});
        }
        base += m;
    }
    return mesh;
}

SolidMesh extrude(const ProfileSet& profiles, double height) {
    SolidMesh out;
    for (const auto& p : profiles.profiles) {
        const auto part = extrude(p, height);
        const std::size_t offset = out.vertices.size();
        out.vertices.insert(out.vertices.end(), part.vertices.begin(), part.vertices.end());
        for (const auto& t : part.triangles) {
            out.triangles.push_back({t[0] + offset, t[1] + offset, t[2] + offset});
        }
    }
    return out;
}

bool is_watertight(const SolidMesh& mesh) {
    std::map<std::pair<std::size_t, std::size_t>, int> count;
    for (const auto& t : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            const auto a = t[static_cast<std::size_t>(k)];
            const auto b = t[static_cast<std::size_t>((k + 1) % 3)];
            ++count[{std::min(a, b), std::max(a, b)}];
        }
    }
    return !count.empty() && std::all_of(count.begin(), count.end(), [](const auto& e) { return e.second == 2; });
}

bool is_consistently_oriented(const SolidMesh& mesh) {
    std::map<std::pair<std::size_t, std::size_t>, int> count;
    for (const auto& t : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            ++count[{t[static_cast<std::size_t>(k)], t[static_cast<std::size_t>((k + 1) % 3)]}];
        }
    }
    for (const auto& [edge, c] : count) {
        const auto it = count.find({edge.second, edge.first});
        if (c != 1 || it == count.end() || it->second != 1) {
            return false;
        }
    }
    return !count.empty();
}

double signed_volume(const SolidMesh& mesh) {
    double v = 0.0;
    for (const auto& t : mesh.triangles) {
        const auto& a = mesh.vertices[t[0]];
        const auto& b = mesh.vertices[t[1]];
        const auto& c = mesh.vertices[t[2]];
        v += a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) + a.z * (b.x * c.y - b.y * c.x);
    }
    return v / 6.0;
}

} // namespace sketchgen::solid
