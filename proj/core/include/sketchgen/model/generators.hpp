#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sketchgen/model/curve_model.hpp"
#include "sketchgen/model/training.hpp"
#include "sketchgen/model/turtle_model.hpp"
#include "sketchgen/model/vertex_model.hpp"
#include "sketchgen/sketch/types.hpp"
#include "sketchgen/tokens/turtle_tokens.hpp"
#include "sketchgen/turtle/program.hpp"

namespace sketchgen::model {

// Number of ground-truth commands kept after the start row in a TurtleGen
// conditioning prefix.
inline constexpr std::size_t kTurtlePrefixCommands = 3;

// Two-stage generator: vertices first, then curves pointing into them.
struct CurveGen {
    VertexModel vertex;
    CurveModel curve;
};

// Turtle-row generator seeded with ground-truth prefixes drawn from a fixed
// dictionary built from the training set.
struct TurtleGen {
    TurtleModel model;
    std::vector<std::vector<tokens::TurtleTokenRow>> prefixes;
};

// Configs for both CurveGen stages from a shared Transformer shape.
std::pair<ModelConfig, ModelConfig> curvegen_configs(const ModelConfig& shape, std::size_t max_vertices,
                                                     std::size_t max_curve_tokens);
ModelConfig turtlegen_config(const ModelConfig& shape, std::size_t max_rows);

// Training sequences of one valid sketch. Vertices are put in (y, x) order.
std::vector<int> vertex_sequence(const sketch::SketchHypergraph& sketch);
CurveExample curve_example(const sketch::SketchHypergraph& sketch);
// Canonical turtle encoding as rows; nullopt when the sketch has open
// chains or more than 100 commands.
std::optional<std::vector<tokens::TurtleTokenRow>> turtle_sequence(const sketch::SketchHypergraph& sketch);

// Distinct start-plus-three-command prefixes of the given sequences, sorted.
std::vector<std::vector<tokens::TurtleTokenRow>>
turtle_prefixes(std::span<const std::vector<tokens::TurtleTokenRow>> sequences);

struct CurveGenTrainResult {
    TrainResult vertex;
    TrainResult curve;
};

// Trains both stages on the sketches. With `jitter`, each time an example is
// drawn the curve model sees freshly jittered vertex inputs.
CurveGenTrainResult train_curvegen(CurveGen& generator, std::span<const sketch::SketchHypergraph> sketches,
                                   const TrainOptions& options, bool jitter = false);
// Trains on the sketches that encode as turtle programs and rebuilds the
// prefix dictionary from them. Throws std::invalid_argument if none encode.
TrainResult train_turtlegen(TurtleGen& generator, std::span<const sketch::SketchHypergraph> sketches,
                            const TrainOptions& options);

struct GenerateOptions {
    std::size_t count = 1;
    double top_p = 0.9;
    std::uint64_t seed = 0;
};

// Samples `count` sketches. Sample i depends only on (seed, i). Malformed
// samples are decoded leniently so that validation can report them; a
// sample that decodes to nothing is an empty sketch.
std::vector<sketch::SketchHypergraph> sample_curvegen(const CurveGen& generator, const GenerateOptions& options);
std::vector<sketch::SketchHypergraph> sample_turtlegen(const TurtleGen& generator, const GenerateOptions& options);

// Program from sampled rows: reads commands up to the first end row,
// skipping stray start rows and ignoring slots beyond each arity.
turtle::TurtleProgram decode_turtle_lenient(std::span<const tokens::TurtleTokenRow> rows);

} // namespace sketchgen::model
