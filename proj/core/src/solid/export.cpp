#include "sketchgen/solid/export.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "sketchgen/sketch/geometry.hpp"

namespace sketchgen::solid {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
    return buf;
}

double flip(double y) { return static_cast<double>(sketch::kGridMax) - y; }

} // namespace

std::string to_obj(const SolidMesh& mesh) {
    std::string out;
    for (const auto& v : mesh.vertices) {
        out += "v " + num(v.x) + ' ' + num(v.y) + ' ' + num(v.z) + '\n';
    }
    for (const auto& t : mesh.triangles) {
        out += "f " + std::to_string(t[0] + 1) + ' ' + std::to_string(t[1] + 1) + ' ' + std::to_string(t[2] + 1) +
               '\n';
    }
    return out;
}

std::string to_svg(const sketch::SketchHypergraph& g) {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 256 256\" width=\"256\" "
                      "height=\"256\">\n<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
    for (const auto& edge : g.edges) {
        sketch::CurvePrimitive prim;
        try {
            prim = sketch::recover_primitive(edge, g.vertices);
        } catch (const InputError&) {
            continue;
        }
        if (const auto* line = std::get_if<sketch::Line>(&prim)) {
            out += "<path d=\"M " + num(line->start.x) + ' ' + num(flip(line->start.y)) + " L " + num(line->end.x) +
                   ' ' + num(flip(line->end.y)) + "\"/>\n";
        } else if (const auto* arc = std::get_if<sketch::Arc>(&prim)) {
            const int large = std::abs(arc->sweep) > std::numbers::pi ? 1 : 0;
            const int sweep = arc->counter_clockwise ? 0 : 1;
            out += "<path d=\"M " + num(arc->start.x) + ' ' + num(flip(arc->start.y)) + " A " + num(arc->radius) +
                   ' ' + num(arc->radius) + " 0 " + std::to_string(large) + ' ' + std::to_string(sweep) + ' ' +
                   num(arc->end.x) + ' ' + num(flip(arc->end.y)) + "\"/>\n";
        } else {
            const auto& c = std::get<sketch::Circle>(prim);
            out += "<circle cx=\"" + num(c.center.x) + "\" cy=\"" + num(flip(c.center.y)) + "\" r=\"" +
                   num(c.radius) + "\"/>\n";
        }
    }
    out += "</g>\n</svg>\n";
    return out;
}

} // namespace sketchgen::solid
