#pragma once

#include <string>

#include "sketchgen/sketch/types.hpp"
#include "sketchgen/solid/mesh.hpp"

namespace sketchgen::solid {

// Wavefront OBJ: "v x y z" lines then "f i j k" lines with 1-based
// indices, LF endings, 9 significant digits.
std::string to_obj(const SolidMesh& mesh);

// SVG document with viewBox "0 0 256 256" and the y axis flipped so the
// sketch appears upright. Lines and arcs are path elements (L and A
// commands), circles are circle elements. Edges whose primitive cannot be
// recovered are skipped.
std::string to_svg(const sketch::SketchHypergraph& sketch);

} // namespace sketchgen::solid
