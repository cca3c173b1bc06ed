#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "sketchgen/solid/profile.hpp"

namespace sketchgen::solid {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct SolidMesh {
    std::vector<Point3> vertices;
    std::vector<std::array<std::size_t, 3>> triangles;
};

// Triangulates a counter-clockwise outer polygon with clockwise holes by
// ear clipping, after bridging each hole into the outer boundary. Indices
// address the concatenation outer, holes[0], holes[1], ...; each triangle
// is counter-clockwise. Throws ProfileError when no ear can be found.
std::vector<std::array<std::size_t, 3>> triangulate(const std::vector<sketch::Point2>& outer,
                                                    const std::vector<std::vector<sketch::Point2>>& holes);

// Prism over the profile between z = 0 and z = height.
SolidMesh extrude(const Profile& profile, double height);
// All profiles of the set, concatenated in order.
SolidMesh extrude(const ProfileSet& profiles, double height);

// Every undirected edge is shared by exactly two triangles.
bool is_watertight(const SolidMesh& mesh);
// Every directed edge occurs once and its reverse once, so neighbouring
// triangles agree on orientation.
bool is_consistently_oriented(const SolidMesh& mesh);
// Divergence-theorem volume; positive for outward-facing triangles.
double signed_volume(const SolidMesh& mesh);

} // namespace sketchgen::solid
