#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "sketchgen/model/autograd.hpp"
#include "sketchgen/sketch/types.hpp"

namespace sketchgen::testing {

// Circumcircle of three integer points in exact rational arithmetic:
// center = (cx_num / den, cy_num / den), radius^2 = r2_num / den^2.
struct ExactCircle {
    std::int64_t cx_num = 0;
    std::int64_t cy_num = 0;
    std::int64_t den = 0;
    // r2_num may exceed 64 bits for large inputs; __int128 keeps it exact.
    __int128 r2_num = 0;

    double center_x() const { return static_cast<double>(cx_num) / static_cast<double>(den); }
    double center_y() const { return static_cast<double>(cy_num) / static_cast<double>(den); }
    double radius() const;
};

// den == 0 for collinear points.
ExactCircle exact_circumcircle(sketch::Vertex a, sketch::Vertex b, sketch::Vertex c);

struct GridFit {
    double a = 0.0;
    double b = 0.0;
    double r = 0.0;
};

// Minimizes sum((x-a)^2 + (y-b)^2 - r^2)^2 by nested grid search: r^2 is
// eliminated in closed form (the mean squared distance), then (a, b) is
// scanned on successively finer grids down to `resolution`.
GridFit brute_force_kasa(std::span<const sketch::Point2> points, double resolution);

struct GradientCheck {
    double max_relative_error = 0.0;
    std::size_t checked = 0;
    // Entry with the largest relative error.
    double worst_analytic = 0.0;
    double worst_numeric = 0.0;
};

// Compares the gradients already stored in `params` with five-point central
// differences of `loss`, perturbing up to `per_parameter` entries of each
// tensor. Relative error is |g - fd| / max(|g|, |fd|, floor).
GradientCheck check_gradients(model::ParameterSet& params, const std::function<double()>& loss, double step,
                              std::size_t per_parameter, double floor = 1e-6);

} // namespace sketchgen::testing
