#include "sketchgen/sketch/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sketchgen::sketch {

namespace {

constexpr double kCollinearTolerance = 1e-9;
constexpr double kSingularTolerance = 1e-12;

double cross(Point2 a, Point2 b, Point2 c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

} // namespace

std::string_view to_string(FailureCategory category) {
    switch (category) {
    case FailureCategory::curve_fit_failure: return "curve_fit_failure";
    case FailureCategory::bad_cardinality: return "bad_cardinality";
    case FailureCategory::repeated_vertex_in_curve: return "repeated_vertex_in_curve";
    case FailureCategory::isolated_vertex: return "isolated_vertex";
    case FailureCategory::vertex_index_out_of_range: return "vertex_index_out_of_range";
    case FailureCategory::empty_sketch: return "empty_sketch";
    }
    return "unknown";
}

double polar_angle(Point2 c, Point2 p) { return std::atan2(p.y - c.y, p.x - c.x); }

CircleFit circumcircle(Point2 p1, Point2 p2, Point2 p3) {
    const double min_x = std::min({p1.x, p2.x, p3.x});
    const double max_x = std::max({p1.x, p2.x, p3.x});
    const double min_y = std::min({p1.y, p2.y, p3.y});
    const double max_y = std::max({p1.y, p2.y, p3.y});
    const double diag2 = (max_x - min_x) * (max_x - min_x) + (max_y - min_y) * (max_y - min_y);

    const double area = 0.5 * std::abs(cross(p1, p2, p3));
    if (diag2 == 0.0 || area < kCollinearTolerance * diag2) {
        throw DegenerateGeometry("circumcircle: points are collinear");
    }

    // Solve relative to the bounding-box centre for conditioning.
    const Point2 origin{0.5 * (min_x + max_x), 0.5 * (min_y + max_y)};
    const double ax = p1.x - origin.x, ay = p1.y - origin.y;
    const double bx = p2.x - origin.x, by = p2.y - origin.y;
    const double cx = p3.x - origin.x, cy = p3.y - origin.y;
    const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    const double a2 = ax * ax + ay * ay;
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    const double ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    const double uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;

    const Point2 center{origin.x + ux, origin.y + uy};
    const double r = (std::hypot(p1.x - center.x, p1.y - center.y) + std::hypot(p2.x - center.x, p2.y - center.y) +
                      std::hypot(p3.x - center.x, p3.y - center.y)) /
                     3.0;
    return {center, r};
}

CircleFit fit_circle_lsq(std::span<const Point2> points) {
    if (points.size() < 3) {
        throw DegenerateGeometry("fit_circle_lsq: need at least 3 points");
    }
    const auto n = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    for (const auto& p : points) {
        mx += p.x;
        my += p.y;
    }
    mx /= n;
    my /= n;

    double spread = 0.0;
    for (const auto& p : points) {
        spread += (p.x - mx) * (p.x - mx) + (p.y - my) * (p.y - my);
    }
    spread /= n;
    if (!(spread > 0.0)) {
        throw DegenerateGeometry("fit_circle_lsq: points coincide");
    }
    const double scale = std::sqrt(spread);

    // Centered, unit-RMS coordinates: the normal matrix for (a, b, c) in
    // u^2 + v^2 = 2au + 2bv + c decouples c, leaving a 2x2 system.
    double suu = 0.0, suv = 0.0, svv = 0.0, suw = 0.0, svw = 0.0, sw = 0.0;
    for (const auto& p : points) {
        const double u = (p.x - mx) / scale;
        const double v = (p.y - my) / scale;
        const double w = u * u + v * v;
        suu += u * u;
        suv += u * v;
        svv += v * v;
        suw += u * w;
        svw += v * w;
        sw += w;
    }
    suu /= n;
    suv /= n;
    svv /= n;
    suw /= n;
    svw /= n;
    sw /= n;

    const double det = suu * svv - suv * suv;
    if (std::abs(16.0 * det) < kSingularTolerance) {
        throw DegenerateGeometry("fit_circle_lsq: points are collinear");
    }
    const double ru = 0.5 * suw;
    const double rv = 0.5 * svw;
    const double a = (ru * svv - rv * suv) / det;
    const double b = (suu * rv - suv * ru) / det;
    const double r2 = sw + a * a + b * b;

    return {{mx + scale * a, my + scale * b}, scale * std::sqrt(r2)};
}

CurvePrimitive recover_primitive(const Hyperedge& edge, std::span<const Vertex> vertices) {
    const auto& ids = edge.vertex_ids;
    if (ids.size() < 2 || ids.size() > 4) {
        throw CurveRecoveryError(FailureCategory::bad_cardinality,
                                 "curve with " + std::to_string(ids.size()) + " vertices");
    }
    std::vector<Point2> pts;
    pts.reserve(ids.size());
    for (auto id : ids) {
        if (id >= vertices.size()) {
            throw CurveRecoveryError(FailureCategory::vertex_index_out_of_range,
                                     "vertex index " + std::to_string(id) + " out of range");
        }
        pts.push_back(to_point(vertices[id]));
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (ids[i] == ids[j] || vertices[ids[i]] == vertices[ids[j]]) {
                throw CurveRecoveryError(FailureCategory::repeated_vertex_in_curve, "curve repeats a vertex");
            }
        }
    }

    try {
        switch (ids.size()) {
        case 2: return Line{pts[0], pts[1]};
        case 3: {
            const auto fit = circumcircle(pts[0], pts[1], pts[2]);
            Arc arc;
            arc.center = fit.center;
            arc.radius = fit.radius;
            arc.start = pts[0];
            arc.end = pts[2];
            arc.counter_clockwise = cross(pts[0], pts[1], pts[2]) > 0.0;
            const double a0 = polar_angle(fit.center, pts[0]);
            const double a1 = polar_angle(fit.center, pts[2]);
            constexpr double two_pi = 2.0 * std::numbers::pi;
            double sweep = a1 - a0;
            if (arc.counter_clockwise) {
                while (sweep <= 0.0) sweep += two_pi;
                while (sweep > two_pi) sweep -= two_pi;
            } else {
                while (sweep >= 0.0) sweep -= two_pi;
                while (sweep < -two_pi) sweep += two_pi;
            }
            arc.sweep = sweep;
            return arc;
        }
        default: {
            const auto fit = fit_circle_lsq(pts);
            return Circle{fit.center, fit.radius};
        }
        }
    } catch (const DegenerateGeometry& e) {
        throw CurveRecoveryError(FailureCategory::curve_fit_failure, e.what());
    }
}

} // namespace sketchgen::sketch
