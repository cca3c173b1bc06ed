#include "sketchgen/model/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sketchgen/tokens/curve_tokens.hpp"
#include "sketchgen/tokens/jitter.hpp"
#include "sketchgen/tokens/vertex_tokens.hpp"
#include "sketchgen/turtle/encode.hpp"
#include "sketchgen/turtle/execute.hpp"

namespace sketchgen::model {

using tokens::TurtleToken;
using tokens::TurtleTokenRow;

std::pair<ModelConfig, ModelConfig> curvegen_configs(const ModelConfig& shape, std::size_t max_vertices,
                                                     std::size_t max_curve_tokens) {
    ModelConfig vertex = shape;
    vertex.kind = ModelKind::vertex;
    vertex.vocab_size = tokens::kVertexVocabSize;
    vertex.max_len = static_cast<int>(2 * max_vertices + 1);
    ModelConfig curve = shape;
    curve.kind = ModelKind::curve;
    curve.vocab_size = sketch::kGridSize;
    curve.max_len = static_cast<int>(max_curve_tokens);
    curve.seed = shape.seed + 1;
    return {vertex, curve};
}

ModelConfig turtlegen_config(const ModelConfig& shape, std::size_t max_rows) {
    ModelConfig c = shape;
    c.kind = ModelKind::turtle;
    c.max_len = static_cast<int>(max_rows);
    return c;
}

std::vector<int> vertex_sequence(const sketch::SketchHypergraph& sketch) { return tokens::encode_vertices(sketch); }

CurveExample curve_example(const sketch::SketchHypergraph& sketch) {
    const auto sorted = tokens::sort_vertices(sketch);
    return {sorted.vertices, tokens::encode_curves(sorted)};
}

std::optional<std::vector<TurtleTokenRow>> turtle_sequence(const sketch::SketchHypergraph& sketch) {
    try {
        return tokens::encode_turtle(turtle::encode(sketch));
    } catch (const InputError&) {
        return std::nullopt;
    }
}

std::vector<std::vector<TurtleTokenRow>> turtle_prefixes(std::span<const std::vector<TurtleTokenRow>> sequences) {
    std::set<std::vector<std::array<int, 7>>> seen;
    std::vector<std::vector<TurtleTokenRow>> out;
    for (const auto& seq : sequences) {
        // start row plus up to three commands, never the end row
        const std::size_t take = std::min(seq.size() - 1, 1 + kTurtlePrefixCommands);
        std::vector<TurtleTokenRow> prefix(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(take));
        std::vector<std::array<int, 7>> key;
        for (const auto& r : prefix) {
            key.push_back(r.to_array());
        }
        if (seen.insert(key).second) {
            out.push_back(std::move(prefix));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const auto& x, const auto& y) { return x.to_array() < y.to_array(); });
    });
    return out;
}

CurveGenTrainResult train_curvegen(CurveGen& generator, std::span<const sketch::SketchHypergraph> sketches,
                                   const TrainOptions& options, bool jitter) {
    std::vector<std::vector<int>> vertex_corpus;
    std::vector<CurveExample> curve_corpus;
    std::vector<sketch::SketchHypergraph> sorted;
    for (const auto& s : sketches) {
        vertex_corpus.push_back(vertex_sequence(s));
        curve_corpus.push_back(curve_example(s));
        sorted.push_back(tokens::sort_vertices(s));
    }
    CurveGenTrainResult result;
    result.vertex = train(generator.vertex, vertex_corpus, options);
    TrainOptions curve_options = options;
    curve_options.seed = derive_seed(options.seed, 1);
    if (!jitter) {
        result.curve = train(generator.curve, curve_corpus, curve_options);
        return result;
    }
    const ExampleLoss loss = [&](Tape& tape, std::size_t i, util::Rng& rng) {
        const auto noisy = tokens::jitter_quantized(sorted[i], rng.next());
        return generator.curve.loss(tape, noisy.vertices, curve_corpus[i].tokens, &rng);
    };
    result.curve = train_parameters(generator.curve.parameters(), curve_corpus.size(), loss, curve_options);
    return result;
}

TrainResult train_turtlegen(TurtleGen& generator, std::span<const sketch::SketchHypergraph> sketches,
                            const TrainOptions& options) {
    std::vector<std::vector<TurtleTokenRow>> corpus;
    for (const auto& s : sketches) {
        if (auto rows = turtle_sequence(s)) {
            corpus.push_back(std::move(*rows));
        }
    }
    if (corpus.empty()) {
        throw std::invalid_argument("no training sketch encodes as a turtle program");
    }
    generator.prefixes = turtle_prefixes(corpus);
    return train(generator.model, corpus, options);
}

std::vector<sketch::SketchHypergraph> sample_curvegen(const CurveGen& generator, const GenerateOptions& options) {
    std::vector<sketch::SketchHypergraph> out;
    out.reserve(options.count);
    for (std::size_t i = 0; i < options.count; ++i) {
        const std::uint64_t seed = derive_seed(options.seed, i);
        SampleOptions vo{options.top_p, seed, static_cast<std::size_t>(generator.vertex.config().max_len)};
        const auto vertex_tokens = generator.vertex.sample(vo);
        sketch::SketchHypergraph g;
        g.vertices = tokens::decode_vertices_lenient(vertex_tokens.tokens);
        if (!g.vertices.empty()) {
            SampleOptions co{options.top_p, derive_seed(seed, 1),
                             static_cast<std::size_t>(generator.curve.config().max_len)};
            const auto curve_tokens = generator.curve.sample(g.vertices, co);
            g.edges = tokens::decode_curves_lenient(curve_tokens.tokens, g.vertices.size());
        }
        out.push_back(std::move(g));
    }
    return out;
}

turtle::TurtleProgram decode_turtle_lenient(std::span<const TurtleTokenRow> rows) {
    turtle::TurtleProgram program;
    for (const auto& row : rows) {
        if (row.command == TurtleToken::end) {
            break;
        }
        if (row.command == TurtleToken::start) {
            continue;
        }
        turtle::TurtleCommand cmd;
        switch (row.command) {
        case TurtleToken::loopstart:
            cmd.kind = turtle::CommandKind::loopstart;
            break;
        case TurtleToken::line:
            cmd.kind = turtle::CommandKind::line;
            break;
        case TurtleToken::arc:
            cmd.kind = turtle::CommandKind::arc;
            break;
        default:
            cmd.kind = turtle::CommandKind::circle;
            break;
        }
        for (std::size_t k = 0; k < turtle::arity(cmd.kind); ++k) {
            cmd.deltas.push_back({row.coords[2 * k] - tokens::kTurtleCoordOffset,
                                  row.coords[2 * k + 1] - tokens::kTurtleCoordOffset});
        }
        program.commands.push_back(std::move(cmd));
    }
    return program;
}

std::vector<sketch::SketchHypergraph> sample_turtlegen(const TurtleGen& generator, const GenerateOptions& options) {
    if (generator.prefixes.empty()) {
        throw std::invalid_argument("turtle generator has no prefix dictionary");
    }
    std::vector<sketch::SketchHypergraph> out;
    out.reserve(options.count);
    for (std::size_t i = 0; i < options.count; ++i) {
        const std::uint64_t seed = derive_seed(options.seed, i);
        util::Rng pick(seed);
        const auto& prefix = generator.prefixes[pick.uniform_int(generator.prefixes.size())];
        SampleOptions so{options.top_p, derive_seed(seed, 1),
                         static_cast<std::size_t>(generator.model.config().max_len)};
        const auto rows = generator.model.sample(prefix, so);
        sketch::SketchHypergraph g;
        try {
            g = turtle::execute(decode_turtle_lenient(rows.rows));
        } catch (const InputError&) {
            g = {};
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace sketchgen::model
