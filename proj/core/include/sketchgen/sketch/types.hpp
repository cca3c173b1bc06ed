#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace sketchgen::sketch {

inline constexpr int kGridSize = 256;
inline constexpr int kGridMax = kGridSize - 1;

// Quantized grid vertex. Ordering is lexicographic on (x, y).
struct Vertex {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// One curve. The primitive kind is implied by the cardinality:
// 2 = line, 3 = arc [start, interior, end], 4 = circle.
struct Hyperedge {
    std::vector<std::size_t> vertex_ids;

    friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

struct SketchHypergraph {
    std::vector<Vertex> vertices;
    std::vector<Hyperedge> edges;

    friend bool operator==(const SketchHypergraph&, const SketchHypergraph&) = default;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 to_point(const Vertex& v) { return {static_cast<double>(v.x), static_cast<double>(v.y)}; }

struct Line {
    Point2 start;
    Point2 end;
};

struct Arc {
    Point2 center;
    double radius = 0.0;
    Point2 start;
    Point2 end;
    bool counter_clockwise = true;
    // Signed angle swept from start to end; positive when counter-clockwise.
    double sweep = 0.0;
};

struct Circle {
    Point2 center;
    double radius = 0.0;
};

using CurvePrimitive = std::variant<Line, Arc, Circle>;

enum class FailureCategory : std::uint8_t {
    curve_fit_failure,
    bad_cardinality,
    repeated_vertex_in_curve,
    isolated_vertex,
    vertex_index_out_of_range,
    empty_sketch,
};

std::string_view to_string(FailureCategory category);

struct ValidityFailure {
    std::optional<std::size_t> edge;
    std::optional<std::size_t> vertex;
    FailureCategory category;

    friend bool operator==(const ValidityFailure&, const ValidityFailure&) = default;
};

struct ValidityReport {
    bool is_valid = false;
    std::vector<ValidityFailure> failures;
};

} // namespace sketchgen::sketch
