#pragma once

#include <span>
#include <stdexcept>

#include "sketchgen/sketch/types.hpp"
#include "sketchgen/util/error.hpp"

namespace sketchgen::sketch {

struct CircleFit {
    Point2 center;
    double radius = 0.0;
};

// Circle through three points. Throws DegenerateGeometry when the triangle's
// area is below 1e-9 times the squared bounding-box diagonal.
CircleFit circumcircle(Point2 p1, Point2 p2, Point2 p3);

// Algebraic (Kasa) least-squares circle: minimizes
//   sum_i ((x_i - a)^2 + (y_i - b)^2 - r^2)^2
// over (a, b, r). Exact for points lying on a circle. Throws DegenerateGeometry
// for fewer than three points or a (near) singular normal matrix.
CircleFit fit_circle_lsq(std::span<const Point2> points);

// Raised by recover_primitive; carries the validity category.
class CurveRecoveryError : public InputError {
public:
    CurveRecoveryError(FailureCategory category, const std::string& what)
        : InputError(what), category_(category) {}

    FailureCategory category() const noexcept { return category_; }

private:
    FailureCategory category_;
};

// Analytic primitive for one hyperedge. Lines keep their listed endpoints,
// arcs use the circumcircle of [start, interior, end], circles the Kasa fit.
CurvePrimitive recover_primitive(const Hyperedge& edge, std::span<const Vertex> vertices);

// Angle of p around c in (-pi, pi].
double polar_angle(Point2 c, Point2 p);

} // namespace sketchgen::sketch
