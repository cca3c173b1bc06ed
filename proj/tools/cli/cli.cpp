#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sketchgen/dedup/dedup.hpp"
#include "sketchgen/metrics/metrics.hpp"
#include "sketchgen/model/checkpoint.hpp"
#include "sketchgen/model/generators.hpp"
#include "sketchgen/sketch/json.hpp"
#include "sketchgen/sketch/quantize.hpp"
#include "sketchgen/sketch/validate.hpp"
#include "sketchgen/solid/constraints.hpp"
#include "sketchgen/solid/export.hpp"
#include "sketchgen/solid/mesh.hpp"
#include "sketchgen/solid/profile.hpp"
#include "sketchgen/tokens/curve_tokens.hpp"
#include "sketchgen/tokens/turtle_tokens.hpp"
#include "sketchgen/tokens/vertex_tokens.hpp"
#include "sketchgen/turtle/encode.hpp"
#include "sketchgen/turtle/execute.hpp"
#include "sketchgen/turtle/text.hpp"

namespace sketchgen::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using sketch::SketchHypergraph;

namespace {

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string read_text(const std::string& path, Io& io) {
    if (path == "-") {
        std::ostringstream s;
        s << io.in.rdbuf();
        return s.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw InputError("cannot write '" + path.string() + "'");
    }
    f << text;
    if (!f) {
        throw InputError("failed writing '" + path.string() + "'");
    }
}

void emit(const std::string& path, const std::string& text, Io& io) {
    if (path.empty() || path == "-") {
        io.out << text;
    } else {
        write_file(path, text);
    }
}

std::vector<SketchHypergraph> read_sketch_file(const std::string& path, Io& io) {
    try {
        return sketch::read_sketches(read_text(path, io));
    } catch (const sketch::SchemaError& e) {
        throw sketch::SchemaError(path + ": " + e.what());
    }
}

std::string numbered(const fs::path& dir, std::size_t i, const char* ext) {
    char name[32];
    std::snprintf(name, sizeof name, "sketch_%04zu.%s", i, ext);
    return (dir / name).string();
}

json failures_to_json(const sketch::ValidityReport& report) {
    json list = json::array();
    for (const auto& f : report.failures) {
        json j;
        j["category"] = std::string(sketch::to_string(f.category));
        j["edge"] = f.edge ? json(*f.edge) : json(nullptr);
        j["vertex"] = f.vertex ? json(*f.vertex) : json(nullptr);
        list.push_back(std::move(j));
    }
    return list;
}

// Shared Transformer shape flags.
struct ShapeFlags {
    int blocks = 2;
    int heads = 4;
    int hidden = 128;
    int output = 64;
    double dropout = 0.0;

    void add_to(CLI::App* app) {
        app->add_option("--blocks", blocks, "Transformer blocks")->capture_default_str()->check(CLI::PositiveNumber);
        app->add_option("--heads", heads, "attention heads")->capture_default_str()->check(CLI::PositiveNumber);
        app->add_option("--hidden-dim", hidden, "MLP hidden width")->capture_default_str()->check(CLI::PositiveNumber);
        app->add_option("--output-dim", output, "model width")->capture_default_str()->check(CLI::PositiveNumber);
        app->add_option("--dropout", dropout, "dropout rate")->capture_default_str()->check(CLI::Range(0.0, 0.999));
    }
};

std::size_t with_margin(std::size_t n) { return n + n / 2 + 1; }

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    Io io{in, out, err};
    CLI::App app{"Engineering sketch generation toolkit", "sketchgen"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for every subcommand");

    std::string input = "-";
    std::string output;
    std::string out_dir;
    std::string report_path;
    std::uint64_t seed = 0;
    double top_p = 0.9;
    int grid = sketch::kGridSize;
    int dedup_grid = dedup::kDefaultDedupGrid;
    int tess = solid::kDefaultSegmentsPerTurn;
    double angle_tol_deg = solid::kDefaultAngleTolerance * 180.0 / std::numbers::pi;
    double dist_tol = 0.0;
    double height = 10.0;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("input", input, "input file, '-' for stdin")->capture_default_str();
        sub->add_option("-o,--output", output, "output file (default stdout)");
    };

    // turtle-exec
    auto* exec_cmd = app.add_subcommand("turtle-exec", "execute a turtle program into a sketch");
    add_io(exec_cmd);

    // turtle-encode
    auto* encode_cmd = app.add_subcommand("turtle-encode", "encode sketches as turtle programs");
    add_io(encode_cmd);
    bool randomized = false;
    encode_cmd->add_flag("--randomized", randomized, "random loop order, start and direction");
    auto* encode_seed = encode_cmd->add_option("--seed", seed, "seed for --randomized");

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "pass valid sketches through and report failures");
    add_io(validate_cmd);
    validate_cmd->add_option("--report", report_path, "validity report file (default stderr)");

    // dedup
    auto* dedup_cmd = app.add_subcommand("dedup", "drop invalid and duplicate sketches");
    add_io(dedup_cmd);
    dedup_cmd->add_option("--dedup-grid", dedup_grid, "dedup quantization grid")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    // quantize
    auto* quantize_cmd = app.add_subcommand("quantize", "fit raw floating-point sketches onto the grid");
    add_io(quantize_cmd);
    quantize_cmd->add_option("--grid", grid, "grid size")->capture_default_str()->check(CLI::Range(2, 256));

    // tokenize
    auto* tokenize_cmd = app.add_subcommand("tokenize", "token sequences of sketches");
    add_io(tokenize_cmd);
    std::string token_kind = "all";
    tokenize_cmd->add_option("--kind", token_kind, "vertex, curve, turtle or all")
        ->capture_default_str()
        ->check(CLI::IsMember({"vertex", "curve", "turtle", "all"}));

    // train
    auto* train_cmd = app.add_subcommand("train", "train a generator on a sketch corpus");
    add_io(train_cmd);
    std::string generator_kind = "curvegen";
    train_cmd->add_option("--generator", generator_kind, "curvegen or turtlegen")
        ->capture_default_str()
        ->check(CLI::IsMember({"curvegen", "turtlegen"}));
    train_cmd->add_option("--seed", seed, "initialization and batching seed")->required();
    ShapeFlags shape;
    shape.add_to(train_cmd);
    model::TrainOptions train_options;
    train_cmd->add_option("--steps", train_options.steps, "optimizer steps")->capture_default_str();
    train_cmd->add_option("--lr", train_options.learning_rate, "Adam learning rate")->capture_default_str();
    train_cmd->add_option("--batch", train_options.batch_size, "sequences per step")->capture_default_str();
    train_cmd->add_option("--patience", train_options.plateau_patience,
                          "validations without improvement before halving the learning rate");
    std::string validation_path;
    train_cmd->add_option("--validation", validation_path, "held-out sketches; keeps the best checkpoint");
    train_cmd->add_option("--validate-every", train_options.validate_every, "steps between validations");
    bool use_jitter = false;
    train_cmd->add_flag("--jitter", use_jitter, "jitter curve-model vertex inputs (curvegen)");
    train_cmd->get_option("--output")->required();

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "sample sketches from a checkpoint");
    std::string model_path;
    std::size_t count = 10;
    sample_cmd->add_option("--model", model_path, "checkpoint file")->required();
    sample_cmd->add_option("--seed", seed, "sampling seed")->required();
    sample_cmd->add_option("--top-p", top_p, "nucleus mass")->capture_default_str()->check(CLI::Range(1e-12, 1.0));
    sample_cmd->add_option("-n,--count", count, "number of samples")->capture_default_str();
    sample_cmd->add_option("-o,--output", output, "output file (default stdout)");

    // metrics
    auto* metrics_cmd = app.add_subcommand("metrics", "unique/valid/novel percentages and bits");
    std::string samples_path, train_path, test_path;
    metrics_cmd->add_option("--samples", samples_path, "sampled sketches")->required();
    metrics_cmd->add_option("--train", train_path, "training sketches")->required();
    metrics_cmd->add_option("--model", model_path, "checkpoint for likelihood metrics");
    metrics_cmd->add_option("--test", test_path, "test sketches for likelihood metrics");
    metrics_cmd->add_option("--dedup-grid", dedup_grid, "dedup quantization grid")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    metrics_cmd->add_option("-o,--output", output, "output file (default stdout)");

    // render-svg
    auto* svg_cmd = app.add_subcommand("render-svg", "render sketches as SVG");
    add_io(svg_cmd);
    svg_cmd->add_option("--out-dir", out_dir, "directory for one file per sketch");

    // extrude
    auto* extrude_cmd = app.add_subcommand("extrude", "extrude closed profiles to OBJ meshes");
    add_io(extrude_cmd);
    extrude_cmd->add_option("--out-dir", out_dir, "directory for one file per sketch");
    extrude_cmd->add_option("--height", height, "extrusion height")->capture_default_str()->check(
        CLI::PositiveNumber);
    extrude_cmd->add_option("--tess", tess, "segments per full circle")->capture_default_str()->check(
        CLI::Range(3, 100000));

    // constrain
    auto* constrain_cmd = app.add_subcommand("constrain", "detect and snap parallel/perpendicular lines");
    add_io(constrain_cmd);
    constrain_cmd->add_option("--angle-tol-deg", angle_tol_deg, "angular tolerance in degrees")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 45.0));
    constrain_cmd->add_option("--dist-tol", dist_tol, "coincidence distance in grid units")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    constrain_cmd->add_option("--report", report_path, "hint report file (default stderr)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (exec_cmd->parsed()) {
            const auto program = turtle::parse(read_text(input, io));
            emit(output, sketch::to_json(turtle::execute(program)) + "\n", io);
        } else if (encode_cmd->parsed()) {
            if (randomized && encode_seed->count() == 0) {
                throw InputError("--randomized needs --seed");
            }
            std::string text;
            const auto sketches = read_sketch_file(input, io);
            for (std::size_t i = 0; i < sketches.size(); ++i) {
                const auto mode = randomized ? turtle::EncodeMode::randomized : turtle::EncodeMode::canonical;
                text += (i > 0 ? "\n" : "") +
                        turtle::serialize(turtle::encode(sketches[i], mode, model::derive_seed(seed, i)));
            }
            emit(output, text, io);
        } else if (validate_cmd->parsed()) {
            const auto sketches = read_sketch_file(input, io);
            std::vector<SketchHypergraph> valid;
            json failures = json::array();
            for (std::size_t i = 0; i < sketches.size(); ++i) {
                const auto report = sketch::validate_sketch(sketches[i]);
                if (report.is_valid) {
                    valid.push_back(sketches[i]);
                } else {
                    failures.push_back({{"index", i}, {"failures", failures_to_json(report)}});
                }
            }
            json report;
            report["total"] = sketches.size();
            report["valid"] = valid.size();
            report["invalid"] = sketches.size() - valid.size();
            report["valid_pct"] = sketches.empty() ? 0.0 : metrics::valid_pct(sketches);
            report["failures"] = std::move(failures);
            if (report_path.empty()) {
                io.err << report.dump() << '\n';
            } else {
                write_file(report_path, report.dump() + "\n");
            }
            emit(output, sketch::to_ndjson(valid), io);
        } else if (dedup_cmd->parsed()) {
            const auto result = dedup::filter_dataset(read_sketch_file(input, io), dedup_grid);
            io.err << json{{"total", result.stats.total},
                           {"kept", result.stats.kept},
                           {"duplicates", result.stats.duplicates},
                           {"invalid", result.stats.invalid}}
                          .dump()
                   << '\n';
            emit(output, sketch::to_ndjson(result.kept), io);
        } else if (quantize_cmd->parsed()) {
            std::vector<SketchHypergraph> sketches;
            for (const auto& raw : sketch::read_raw_sketches(read_text(input, io))) {
                sketches.push_back(sketch::quantize_sketch(raw, grid));
            }
            emit(output, sketch::to_ndjson(sketches), io);
        } else if (tokenize_cmd->parsed()) {
            std::string text;
            for (const auto& g : read_sketch_file(input, io)) {
                const auto sorted = tokens::sort_vertices(g);
                json vertex = tokens::encode_vertices(sorted);
                json curve = tokens::encode_curves(sorted);
                json turtle_rows = nullptr;
                if (token_kind == "turtle" || token_kind == "all") {
                    const auto rows = model::turtle_sequence(g);
                    if (!rows && token_kind == "turtle") {
                        throw InputError("sketch does not encode as a turtle program");
                    }
                    if (rows) {
                        turtle_rows = json::array();
                        for (const auto& r : *rows) {
                            turtle_rows.push_back(r.to_array());
                        }
                    }
                }
                json line;
                if (token_kind == "vertex") {
                    line = vertex;
                } else if (token_kind == "curve") {
                    line = curve;
                } else if (token_kind == "turtle") {
                    line = turtle_rows;
                } else {
                    line = {{"vertex", vertex}, {"curve", curve}, {"turtle", turtle_rows}};
                }
                text += line.dump() + "\n";
            }
            emit(output, text, io);
        } else if (train_cmd->parsed()) {
            const auto corpus = read_sketch_file(input, io);
            std::vector<SketchHypergraph> valid;
            for (const auto& g : corpus) {
                if (sketch::is_valid(g)) {
                    valid.push_back(g);
                }
            }
            if (valid.empty()) {
                throw InputError("training corpus has no valid sketch");
            }
            model::ModelConfig base;
            base.blocks = shape.blocks;
            base.heads = shape.heads;
            base.hidden_dim = shape.hidden;
            base.output_dim = shape.output;
            base.dropout = shape.dropout;
            base.seed = seed;
            train_options.seed = seed;
            std::vector<SketchHypergraph> validation;
            if (!validation_path.empty()) {
                validation = read_sketch_file(validation_path, io);
                if (train_options.validate_every == 0) {
                    train_options.validate_every = std::max(1, train_options.steps / 10);
                }
            }
            json summary;
            if (generator_kind == "curvegen") {
                std::size_t max_vertices = 0, max_tokens = 0;
                for (const auto& g : valid) {
                    max_vertices = std::max(max_vertices, g.vertices.size());
                    max_tokens = std::max(max_tokens, model::curve_example(g).tokens.size());
                }
                const auto [vc, cc] = model::curvegen_configs(base, with_margin(max_vertices), with_margin(max_tokens));
                model::CurveGen gen{model::VertexModel(vc), model::CurveModel(cc)};
                if (!validation.empty()) {
                    std::vector<std::vector<int>> vval;
                    std::vector<model::CurveExample> cval;
                    for (const auto& g : validation) {
                        vval.push_back(model::vertex_sequence(g));
                        cval.push_back(model::curve_example(g));
                    }
                    std::vector<std::vector<int>> vtrain;
                    std::vector<model::CurveExample> ctrain;
                    for (const auto& g : valid) {
                        vtrain.push_back(model::vertex_sequence(g));
                        ctrain.push_back(model::curve_example(g));
                    }
                    const auto rv = model::train(gen.vertex, vtrain, train_options, vval);
                    auto copts = train_options;
                    copts.seed = model::derive_seed(seed, 1);
                    const auto rc = model::train(gen.curve, ctrain, copts, cval);
                    summary = {{"vertex_final_loss", rv.losses.back()}, {"curve_final_loss", rc.losses.back()},
                               {"vertex_best_validation", rv.best_validation},
                               {"curve_best_validation", rc.best_validation}};
                } else {
                    const auto r = model::train_curvegen(gen, valid, train_options, use_jitter);
                    summary = {{"vertex_final_loss", r.vertex.losses.back()},
                               {"curve_final_loss", r.curve.losses.back()}};
                }
                model::save_checkpoint(output, model::Generator(std::move(gen)));
            } else {
                std::size_t max_rows = 0;
                for (const auto& g : valid) {
                    if (const auto rows = model::turtle_sequence(g)) {
                        max_rows = std::max(max_rows, rows->size());
                    }
                }
                const std::size_t limit = turtle::kMaxCommands + 2;
                model::TurtleGen gen{model::TurtleModel(model::turtlegen_config(
                                         base, std::min(limit, with_margin(max_rows)))),
                                     {}};
                const auto r = model::train_turtlegen(gen, valid, train_options);
                summary = {{"final_loss", r.losses.back()}, {"prefixes", gen.prefixes.size()}};
                model::save_checkpoint(output, model::Generator(std::move(gen)));
            }
            summary["train_sketches"] = valid.size();
            io.err << summary.dump() << '\n';
        } else if (sample_cmd->parsed()) {
            const auto generator = model::load_checkpoint(model_path);
            const model::GenerateOptions options{count, top_p, seed};
            const auto samples = std::holds_alternative<model::CurveGen>(generator)
                                     ? model::sample_curvegen(std::get<model::CurveGen>(generator), options)
                                     : model::sample_turtlegen(std::get<model::TurtleGen>(generator), options);
            emit(output, sketch::to_ndjson(samples), io);
        } else if (metrics_cmd->parsed()) {
            const auto samples = read_sketch_file(samples_path, io);
            const auto train_set = read_sketch_file(train_path, io);
            std::optional<model::Generator> generator;
            std::vector<SketchHypergraph> test_set;
            if (!model_path.empty() != !test_path.empty()) {
                throw InputError("--model and --test must be given together");
            }
            if (!model_path.empty()) {
                generator = model::load_checkpoint(model_path);
                test_set = read_sketch_file(test_path, io);
            }
            const auto report = metrics::compute_report(samples, train_set, generator ? &*generator : nullptr,
                                                        test_set, dedup_grid);
            emit(output, metrics::to_json(report) + "\n", io);
        } else if (svg_cmd->parsed()) {
            const auto sketches = read_sketch_file(input, io);
            if (!out_dir.empty()) {
                fs::create_directories(out_dir);
                for (std::size_t i = 0; i < sketches.size(); ++i) {
                    write_file(numbered(out_dir, i, "svg"), solid::to_svg(sketches[i]));
                }
            } else if (sketches.size() == 1) {
                emit(output, solid::to_svg(sketches.front()), io);
            } else {
                throw InputError("render-svg got " + std::to_string(sketches.size()) +
                                 " sketches; pass --out-dir for more than one");
            }
        } else if (extrude_cmd->parsed()) {
            const auto sketches = read_sketch_file(input, io);
            if (out_dir.empty()) {
                if (sketches.size() != 1) {
                    throw InputError("extrude got " + std::to_string(sketches.size()) +
                                     " sketches; pass --out-dir for more than one");
                }
                const auto mesh = solid::extrude(solid::build_profiles(sketches.front(), tess), height);
                emit(output, solid::to_obj(mesh), io);
            } else {
                fs::create_directories(out_dir);
                std::size_t written = 0;
                for (std::size_t i = 0; i < sketches.size(); ++i) {
                    try {
                        const auto profiles = solid::build_profiles(sketches[i], tess);
                        if (profiles.profiles.empty()) {
                            io.err << "sketch " << i << ": no closed profile\n";
                            continue;
                        }
                        write_file(numbered(out_dir, i, "obj"), solid::to_obj(solid::extrude(profiles, height)));
                        ++written;
                    } catch (const InputError& e) {
                        io.err << "sketch " << i << ": " << e.what() << '\n';
                    }
                }
                io.err << json{{"total", sketches.size()}, {"extruded", written}}.dump() << '\n';
            }
        } else if (constrain_cmd->parsed()) {
            const double tol = angle_tol_deg * std::numbers::pi / 180.0;
            std::vector<SketchHypergraph> snapped;
            json report = json::array();
            for (const auto& g : read_sketch_file(input, io)) {
                const auto hints = solid::detect_constraints(g, tol, dist_tol);
                const auto result = solid::snap_constraints(g, hints, {tol});
                json entry = {{"hints", hints.size()}, {"unsatisfied", json::array()}};
                for (const auto& h : result.unsatisfied) {
                    entry["unsatisfied"].push_back(
                        {{"kind", std::string(solid::to_string(h.kind))}, {"first", h.first}, {"second", h.second}});
                }
                report.push_back(std::move(entry));
                snapped.push_back(result.sketch);
            }
            if (report_path.empty()) {
                io.err << report.dump() << '\n';
            } else {
                write_file(report_path, report.dump() + "\n");
            }
            emit(output, sketch::to_ndjson(snapped), io);
        }
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace sketchgen::cli
