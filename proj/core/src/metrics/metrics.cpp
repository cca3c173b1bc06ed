#include "sketchgen/metrics/metrics.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include <nlohmann/json.hpp>

#include "sketchgen/sketch/validate.hpp"
#include "sketchgen/tokens/vertex_tokens.hpp"

namespace sketchgen::metrics {

namespace {

void require_nonempty(std::size_t n, const char* what) {
    if (n == 0) {
        throw MetricsError(std::string(what) + " is empty");
    }
}

double pct(std::size_t part, std::size_t total) {
    return 100.0 * static_cast<double>(part) / static_cast<double>(total);
}

} // namespace

double bits_per_vertex(std::span<const LikelihoodSample> samples) {
    require_nonempty(samples.size(), "test set");
    double nll = 0.0;
    std::size_t vertices = 0;
    for (const auto& s : samples) {
        nll += s.nll_nats;
        vertices += s.vertex_count;
    }
    if (vertices == 0) {
        throw MetricsError("test set has no vertices");
    }
    return nll / static_cast<double>(vertices) / std::numbers::ln2;
}

double bits_per_sketch(std::span<const LikelihoodSample> samples) {
    require_nonempty(samples.size(), "test set");
    double nll = 0.0;
    for (const auto& s : samples) {
        nll += s.nll_nats;
    }
    return nll / static_cast<double>(samples.size()) / std::numbers::ln2;
}

std::vector<LikelihoodSample> score_vertex_model(const model::VertexModel& model,
                                                 std::span<const sketch::SketchHypergraph> test_set) {
    std::vector<LikelihoodSample> out;
    for (const auto& g : test_set) {
        out.push_back({model.nll(model::vertex_sequence(g)), g.vertices.size()});
    }
    return out;
}

std::vector<LikelihoodSample> score_curve_model(const model::CurveModel& model,
                                                std::span<const sketch::SketchHypergraph> test_set) {
    std::vector<LikelihoodSample> out;
    for (const auto& g : test_set) {
        const auto example = model::curve_example(g);
        out.push_back({model.nll(example.vertices, example.tokens), g.vertices.size()});
    }
    return out;
}

std::vector<LikelihoodSample> score_turtle_model(const model::TurtleModel& model,
                                                 std::span<const sketch::SketchHypergraph> test_set) {
    std::vector<LikelihoodSample> out;
    for (const auto& g : test_set) {
        if (const auto rows = model::turtle_sequence(g)) {
            out.push_back({model.nll(*rows), g.vertices.size()});
        }
    }
    return out;
}

double unique_pct(std::span<const sketch::SketchHypergraph> samples, int grid) {
    require_nonempty(samples.size(), "sample set");
    std::set<dedup::DedupKey> classes;
    for (const auto& g : samples) {
        classes.insert(dedup::dedup_key_lenient(g, grid));
    }
    return pct(classes.size(), samples.size());
}

double novel_pct(std::span<const sketch::SketchHypergraph> samples,
                 std::span<const sketch::SketchHypergraph> train_set, int grid) {
    require_nonempty(samples.size(), "sample set");
    std::set<dedup::DedupKey> seen;
    for (const auto& g : train_set) {
        seen.insert(dedup::dedup_key_lenient(g, grid));
    }
    std::size_t novel = 0;
    for (const auto& g : samples) {
        novel += seen.count(dedup::dedup_key_lenient(g, grid)) == 0 ? 1 : 0;
    }
    return pct(novel, samples.size());
}

double valid_pct(std::span<const sketch::SketchHypergraph> samples) {
    require_nonempty(samples.size(), "sample set");
    std::size_t valid = 0;
    for (const auto& g : samples) {
        valid += sketch::is_valid(g) ? 1 : 0;
    }
    return pct(valid, samples.size());
}

MetricsReport compute_report(std::span<const sketch::SketchHypergraph> samples,
                             std::span<const sketch::SketchHypergraph> train_set, const model::Generator* generator,
                             std::span<const sketch::SketchHypergraph> test_set, int grid) {
    MetricsReport r;
    r.sample_count = samples.size();
    r.unique_pct = unique_pct(samples, grid);
    r.valid_pct = valid_pct(samples);
    r.novel_pct = novel_pct(samples, train_set, grid);
    if (generator != nullptr && !test_set.empty()) {
        if (const auto* cg = std::get_if<model::CurveGen>(generator)) {
            const auto v = score_vertex_model(cg->vertex, test_set);
            r.bits_per_vertex = bits_per_vertex(v);
            r.bits_per_sketch = bits_per_sketch(v);
            r.curve_bits_per_sketch = bits_per_sketch(score_curve_model(cg->curve, test_set));
        } else {
            const auto t = score_turtle_model(std::get<model::TurtleGen>(*generator).model, test_set);
            if (t.empty()) {
                throw MetricsError("no test sketch encodes as a turtle program");
            }
            r.bits_per_vertex = bits_per_vertex(t);
            r.bits_per_sketch = bits_per_sketch(t);
        }
    }
    return r;
}

std::string to_json(const MetricsReport& report) {
    auto opt = [](const std::optional<double>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr); };
    nlohmann::ordered_json j;
    j["bits_per_vertex"] = opt(report.bits_per_vertex);
    j["bits_per_sketch"] = opt(report.bits_per_sketch);
    j["curve_bits_per_sketch"] = opt(report.curve_bits_per_sketch);
    j["unique_pct"] = report.unique_pct;
    j["valid_pct"] = report.valid_pct;
    j["novel_pct"] = report.novel_pct;
    j["sample_count"] = report.sample_count;
    return j.dump();
}

} // namespace sketchgen::metrics
