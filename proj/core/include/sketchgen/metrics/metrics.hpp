#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sketchgen/dedup/dedup.hpp"
#include "sketchgen/model/checkpoint.hpp"
#include "sketchgen/sketch/types.hpp"
#include "sketchgen/util/error.hpp"

namespace sketchgen::metrics {

class MetricsError : public InputError {
public:
    using InputError::InputError;
};

// Negative log likelihood of one test sketch under a model.
struct LikelihoodSample {
    double nll_nats = 0.0;
    std::size_t vertex_count = 0;
};

// (sum of nll) / (sum of vertices) / ln 2.
double bits_per_vertex(std::span<const LikelihoodSample> samples);
// mean nll / ln 2.
double bits_per_sketch(std::span<const LikelihoodSample> samples);

// Likelihoods of test sketches under each stage of a generator.
std::vector<LikelihoodSample> score_vertex_model(const model::VertexModel& model,
                                                 std::span<const sketch::SketchHypergraph> test_set);
std::vector<LikelihoodSample> score_curve_model(const model::CurveModel& model,
                                                std::span<const sketch::SketchHypergraph> test_set);
// Sketches that do not encode as turtle programs are skipped.
std::vector<LikelihoodSample> score_turtle_model(const model::TurtleModel& model,
                                                 std::span<const sketch::SketchHypergraph> test_set);

// Percentages in [0, 100]. Keys come from dedup_key_lenient so invalid
// samples still count. All throw MetricsError on an empty sample set.
double unique_pct(std::span<const sketch::SketchHypergraph> samples, int grid = dedup::kDefaultDedupGrid);
double novel_pct(std::span<const sketch::SketchHypergraph> samples,
                 std::span<const sketch::SketchHypergraph> train_set, int grid = dedup::kDefaultDedupGrid);
double valid_pct(std::span<const sketch::SketchHypergraph> samples);

struct MetricsReport {
    // Model likelihood fields are absent when no model or test set is given.
    std::optional<double> bits_per_vertex;
    std::optional<double> bits_per_sketch;
    // CurveGen's second stage, reported separately from the vertex stage.
    std::optional<double> curve_bits_per_sketch;
    double unique_pct = 0.0;
    double valid_pct = 0.0;
    double novel_pct = 0.0;
    std::size_t sample_count = 0;
};

// Unique/valid/novel over the samples; likelihood fields from the
// generator over the test set when both are given.
MetricsReport compute_report(std::span<const sketch::SketchHypergraph> samples,
                             std::span<const sketch::SketchHypergraph> train_set,
                             const model::Generator* generator = nullptr,
                             std::span<const sketch::SketchHypergraph> test_set = {},
                             int grid = dedup::kDefaultDedupGrid);

// {"bits_per_vertex": x|null, "bits_per_sketch": x|null,
//  "curve_bits_per_sketch": x|null, "unique_pct": .., "valid_pct": ..,
//  "novel_pct": .., "sample_count": n}
std::string to_json(const MetricsReport& report);

} // namespace sketchgen::metrics
