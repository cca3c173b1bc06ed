#include "sketchgen/turtle/execute.hpp"

#include <map>
#include <string>

namespace sketchgen::turtle {

using sketch::Hyperedge;
using sketch::SketchHypergraph;
using sketch::Vertex;

sketch::SketchHypergraph execute(const TurtleProgram& program) {
    validate_program(program);

    SketchHypergraph out;
    std::map<Vertex, std::size_t> ids;
    auto vertex_id = [&](Vertex v, std::size_t command) {
        if (v.x < 0 || v.x > sketch::kGridMax || v.y < 0 || v.y > sketch::kGridMax) {
            throw OutOfGridError("command " + std::to_string(command) + " moves the pen to (" + std::to_string(v.x) +
                                 "," + std::to_string(v.y) + "), outside the 256x256 grid");
        }
        auto [it, inserted] = ids.try_emplace(v, out.vertices.size());
        if (inserted) {
            out.vertices.push_back(v);
        }
        return it->second;
    };

    Vertex pen{0, 0};
    for (std::size_t i = 0; i < program.commands.size(); ++i) {
        const auto& cmd = program.commands[i];
        if (cmd.kind == CommandKind::loopstart) {
            pen = {cmd.deltas[0].dx, cmd.deltas[0].dy};
            (void)vertex_id(pen, i);
            continue;
        }
        Hyperedge edge;
        edge.vertex_ids.push_back(vertex_id(pen, i));
        for (const auto& d : cmd.deltas) {
            pen = {pen.x + d.dx, pen.y + d.dy};
            edge.vertex_ids.push_back(vertex_id(pen, i));
        }
        out.edges.push_back(std::move(edge));
    }
    return out;
}

} // namespace sketchgen::turtle
