#pragma once

#include <cstddef>
#include <numbers>
#include <string_view>
#include <vector>

#include "sketchgen/sketch/types.hpp"

namespace sketchgen::solid {

inline constexpr double kDefaultAngleTolerance = 2.0 * std::numbers::pi / 180.0;

enum class ConstraintKind { parallel, perpendicular, coincident };

std::string_view to_string(ConstraintKind kind);

// For parallel/perpendicular hints `first` and `second` are line edge
// indices and deviation is in radians; for coincident hints they are vertex
// indices and deviation is the distance in grid units.
struct ConstraintHint {
    ConstraintKind kind = ConstraintKind::parallel;
    std::size_t first = 0;
    std::size_t second = 0;
    double deviation = 0.0;

    friend bool operator==(const ConstraintHint&, const ConstraintHint&) = default;
};

// Line pairs whose directions (mod pi) differ by at most angle_tol from 0
// (parallel) or pi/2 (perpendicular), and vertex pairs at most dist_tol
// apart. Sorted by kind, then (first, second). Zero-length lines are skipped.
std::vector<ConstraintHint> detect_constraints(const sketch::SketchHypergraph& sketch,
                                               double angle_tol = kDefaultAngleTolerance, double dist_tol = 0.0);

struct SnapOptions {
    // Reference directions within this angle of an axis snap to the axis.
    double angle_tol = kDefaultAngleTolerance;
};

struct SnapResult {
    sketch::SketchHypergraph sketch;
    // Hints that could not be honoured: conflicting targets within a group
    // of related lines, or a line collapsing to a point.
    std::vector<ConstraintHint> unsatisfied;
};

// Least-change vertex adjustment. Coincident vertices move to their
// centroid. Lines linked by parallel/perpendicular hints share a reference
// direction (their length-weighted mean modulo 90 degrees, snapped to the
// axes when within angle_tol); each line is assigned the nearest multiple of
// 90 degrees from it, and all vertices are moved jointly by the smallest
// total displacement that makes every hinted line point exactly along its
// target. The result is rounded to the grid and duplicate vertices merged.
SnapResult snap_constraints(const sketch::SketchHypergraph& sketch, const std::vector<ConstraintHint>& hints,
                            const SnapOptions& options = {});

} // namespace sketchgen::solid
