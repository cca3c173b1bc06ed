#include "sketchgen/solid/constraints.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>
#include <stdexcept>

#include "sketchgen/sketch/quantize.hpp"

namespace sketchgen::solid {

using sketch::Point2;

namespace {

constexpr double kPi = std::numbers::pi;

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
};

bool is_line(const sketch::SketchHypergraph& g, std::size_t e) {
    const auto& ids = g.edges[e].vertex_ids;
    return ids.size() == 2 && ids[0] < g.vertices.size() && ids[1] < g.vertices.size() &&
           g.vertices[ids[0]] != g.vertices[ids[1]];
}

double direction(Point2 a, Point2 b) {
    double t = std::atan2(b.y - a.y, b.x - a.x);
    t = std::fmod(t, kPi);
    return t < 0.0 ? t + kPi : t;
}

// Distance between two directions modulo pi, in [0, pi/2].
double angle_gap(double a, double b) {
    double d = std::fmod(std::abs(a - b), kPi);
    return std::min(d, kPi - d);
}

long round_half_away(double v) { return std::lround(v); }

} // namespace

std::string_view to_string(ConstraintKind kind) {
    switch (kind) {
    case ConstraintKind::parallel:
        return "parallel";
    case ConstraintKind::perpendicular:
        return "perpendicular";
    case ConstraintKind::coincident:
        return "coincident";
    }
    return "unknown";
}

std::vector<ConstraintHint> detect_constraints(const sketch::SketchHypergraph& g, double angle_tol, double dist_tol) {
    if (angle_tol < 0.0 || dist_tol < 0.0) {
        throw std::invalid_argument("tolerances must be non-negative");
    }
    std::vector<std::size_t> lines;
    std::vector<double> dirs;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (is_line(g, e)) {
            const auto& ids = g.edges[e].vertex_ids;
            lines.push_back(e);
            dirs.push_back(direction(sketch::to_point(g.vertices[ids[0]]), sketch::to_point(g.vertices[ids[1]])));
        }
    }
    std::vector<ConstraintHint> hints;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const double gap = angle_gap(dirs[i], dirs[j]);
            if (gap <= angle_tol) {
                hints.push_back({ConstraintKind::parallel, lines[i], lines[j], gap});
            } else if (std::abs(gap - kPi / 2) <= angle_tol) {
                hints.push_back({ConstraintKind::perpendicular, lines[i], lines[j], std::abs(gap - kPi / 2)});
            }
        }
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            const double d = std::hypot(g.vertices[i].x - g.vertices[j].x, g.vertices[i].y - g.vertices[j].y);
            if (d <= dist_tol) {
                hints.push_back({ConstraintKind::coincident, i, j, d});
            }
        }
    }
    std::sort(hints.begin(), hints.end(), [](const ConstraintHint& a, const ConstraintHint& b) {
        return std::tie(a.kind, a.first, a.second) < std::tie(b.kind, b.first, b.second);
    });
    return hints;
}

SnapResult snap_constraints(const sketch::SketchHypergraph& g, const std::vector<ConstraintHint>& hints,
                            const SnapOptions& options) {
    const std::size_t nv = g.vertices.size();
    SnapResult result;

    UnionFind merged(nv);
    for (const auto& h : hints) {
        if (h.kind == ConstraintKind::coincident) {
            if (h.first >= nv || h.second >= nv) {
                throw std::invalid_argument("coincident hint refers to a missing vertex");
            }
            merged.unite(h.first, h.second);
        }
    }
    // one position variable per merged class, starting at its centroid
    std::map<std::size_t, std::size_t> var_of_root;
    std::vector<std::size_t> var(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        const auto [it, added] = var_of_root.emplace(merged.find(v), var_of_root.size());
        var[v] = it->second;
    }
    const std::size_t nvar = var_of_root.size();
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * nvar));
    std::vector<double> members(nvar, 0.0);
    for (std::size_t v = 0; v < nv; ++v) {
        x0(static_cast<Eigen::Index>(2 * var[v])) += g.vertices[v].x;
        x0(static_cast<Eigen::Index>(2 * var[v] + 1)) += g.vertices[v].y;
        members[var[v]] += 1.0;
    }
    for (std::size_t k = 0; k < nvar; ++k) {
        x0.segment(static_cast<Eigen::Index>(2 * k), 2) /= members[k];
    }

    // groups of lines linked by angular hints
    const std::size_t ne = g.edges.size();
    UnionFind groups(ne);
    std::vector<bool> hinted(ne, false);
    std::vector<ConstraintHint> angular;
    for (const auto& h : hints) {
        if (h.kind == ConstraintKind::coincident) {
            continue;
        }
        if (h.first >= ne || h.second >= ne || !is_line(g, h.first) || !is_line(g, h.second)) {
            throw std::invalid_argument("angular hint refers to something other than a line");
        }
        groups.unite(h.first, h.second);
        hinted[h.first] = hinted[h.second] = true;
        angular.push_back(h);
    }
    auto endpoints = [&](std::size_t e) {
        const auto& ids = g.edges[e].vertex_ids;
        return std::pair{sketch::to_point(g.vertices[ids[0]]), sketch::to_point(g.vertices[ids[1]])};
    };
    std::map<std::size_t, std::pair<double, double>> moments;
    for (std::size_t e = 0; e < ne; ++e) {
        if (!hinted[e]) {
            continue;
        }
        const auto [a, b] = endpoints(e);
        const double w = std::hypot(b.x - a.x, b.y - a.y);
        const double t = direction(a, b);
        auto& m = moments[groups.find(e)];
        m.first += w * std::cos(4.0 * t);
        m.second += w * std::sin(4.0 * t);
    }
    std::map<std::size_t, double> reference;
    for (const auto& [root, m] : moments) {
        double ref = std::atan2(m.second, m.first) / 4.0;
        if (angle_gap(ref, 0.0) <= options.angle_tol || angle_gap(ref, kPi / 2) <= options.angle_tol) {
            ref = 0.0;
        }
        reference[root] = ref;
    }
    std::vector<double> target(ne, 0.0);
    std::vector<int> quarter(ne, 0);
    for (std::size_t e = 0; e < ne; ++e) {
        if (!hinted[e]) {
            continue;
        }
        const auto [a, b] = endpoints(e);
        const double ref = reference[groups.find(e)];
        quarter[e] = angle_gap(direction(a, b), ref) <= kPi / 4 ? 0 : 1;
        target[e] = ref + quarter[e] * kPi / 2;
    }

    std::vector<std::array<double, 4>> rows;
    std::vector<std::array<std::size_t, 2>> cols;
    std::vector<bool> collapsed(ne, false);
    for (std::size_t e = 0; e < ne; ++e) {
        if (!hinted[e]) {
            continue;
        }
        const auto& ids = g.edges[e].vertex_ids;
        const std::size_t va = var[ids[0]], vb = var[ids[1]];
        if (va == vb) {
            collapsed[e] = true;
            continue;
        }
        const double nx = -std::sin(target[e]);
        const double ny = std::cos(target[e]);
        rows.push_back({-nx, -ny, nx, ny});
        cols.push_back({va, vb});
    }
    Eigen::VectorXd x = x0;
    if (!rows.empty()) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()), x0.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto ri = static_cast<Eigen::Index>(r);
            a(ri, static_cast<Eigen::Index>(2 * cols[r][0])) = rows[r][0];
            a(ri, static_cast<Eigen::Index>(2 * cols[r][0] + 1)) = rows[r][1];
            a(ri, static_cast<Eigen::Index>(2 * cols[r][1])) = rows[r][2];
            a(ri, static_cast<Eigen::Index>(2 * cols[r][1] + 1)) = rows[r][3];
        }
        const Eigen::VectorXd residual = a * x0;
        x = x0 - a.completeOrthogonalDecomposition().solve(residual);
    }

    sketch::SketchHypergraph out = g;
    for (std::size_t v = 0; v < nv; ++v) {
        const auto k = static_cast<Eigen::Index>(2 * var[v]);
        out.vertices[v].x = static_cast<int>(std::clamp<long>(round_half_away(x(k)), 0, sketch::kGridMax));
        out.vertices[v].y = static_cast<int>(std::clamp<long>(round_half_away(x(k + 1)), 0, sketch::kGridMax));
    }
    for (std::size_t e = 0; e < ne; ++e) {
        if (hinted[e] && !collapsed[e]) {
            const auto& ids = g.edges[e].vertex_ids;
            collapsed[e] = out.vertices[ids[0]] == out.vertices[ids[1]];
        }
    }
    for (const auto& h : angular) {
        const bool same = quarter[h.first] == quarter[h.second];
        const bool wanted = h.kind == ConstraintKind::parallel ? same : !same;
        if (!wanted || collapsed[h.first] || collapsed[h.second]) {
            result.unsatisfied.push_back(h);
        }
    }
    result.sketch = sketch::merge_duplicate_vertices(out);
    return result;
}

} // namespace sketchgen::solid
