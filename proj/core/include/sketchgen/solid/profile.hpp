#pragma once

#include <cstddef>
#include <vector>

#include "sketchgen/sketch/loops.hpp"
#include "sketchgen/sketch/types.hpp"
#include "sketchgen/util/error.hpp"

namespace sketchgen::solid {

inline constexpr int kDefaultSegmentsPerTurn = 64;
inline constexpr int kMinCurveSegments = 8;

class ProfileError : public InputError {
public:
    using InputError::InputError;
};

// A closed loop and its polygonal approximation. The polygon is listed
// without repeating its first point; outer loops run counter-clockwise and
// holes clockwise.
struct ProfileLoop {
    sketch::Loop loop;
    std::vector<sketch::Point2> polygon;
};

struct Profile {
    ProfileLoop outer;
    std::vector<ProfileLoop> holes;
};

struct ProfileSet {
    std::vector<Profile> profiles;
    // Edges on no closed loop, excluded from the profiles.
    std::vector<std::vector<std::size_t>> open_chains;
};

// Polygon of a loop in traversal order. Arcs and circles get
// segments_per_turn segments per full turn (at least kMinCurveSegments per
// curve); curve endpoints are exact vertex coordinates.
std::vector<sketch::Point2> tessellate_loop(const sketch::SketchHypergraph& sketch, const sketch::Loop& loop,
                                            int segments_per_turn = kDefaultSegmentsPerTurn);

// Positive for counter-clockwise polygons.
double signed_area(const std::vector<sketch::Point2>& polygon);

// Even-odd point-in-polygon test.
bool point_in_polygon(sketch::Point2 p, const std::vector<sketch::Point2>& polygon);

// Groups the sketch's loops into profiles by containment depth: even depth
// starts a profile, odd depth is a hole of its immediate container. Throws
// ProfileError for an invalid sketch, a self-intersecting loop, or loops
// that touch or cross.
ProfileSet build_profiles(const sketch::SketchHypergraph& sketch, int segments_per_turn = kDefaultSegmentsPerTurn);

} // namespace sketchgen::solid
