#include "sketchgen/sketch/validate.hpp"

#include "sketchgen/sketch/geometry.hpp"

namespace sketchgen::sketch {

ValidityReport validate_sketch(const SketchHypergraph& sketch) {
    ValidityReport report;
    if (sketch.edges.empty()) {
        report.failures.push_back({std::nullopt, std::nullopt, FailureCategory::empty_sketch});
    }

    std::vector<bool> referenced(sketch.vertices.size(), false);
    for (std::size_t e = 0; e < sketch.edges.size(); ++e) {
        const auto& edge = sketch.edges[e];
        for (auto id : edge.vertex_ids) {
            if (id < referenced.size()) {
                referenced[id] = true;
            }
        }
        try {
            (void)recover_primitive(edge, sketch.vertices);
        } catch (const CurveRecoveryError& err) {
            report.failures.push_back({e, std::nullopt, err.category()});
        }
    }
    for (std::size_t v = 0; v < referenced.size(); ++v) {
        if (!referenced[v]) {
            report.failures.push_back({std::nullopt, v, FailureCategory::isolated_vertex});
        }
    }
    report.is_valid = report.failures.empty();
    return report;
}

} // namespace sketchgen::sketch
