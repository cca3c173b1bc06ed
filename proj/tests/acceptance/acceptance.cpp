// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli/cli.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sketchgen/dedup/dedup.hpp"
#include "sketchgen/metrics/metrics.hpp"
#include "sketchgen/model/generators.hpp"
#include "sketchgen/model/sampling.hpp"
#include "sketchgen/model/training.hpp"
#include "sketchgen/model/vertex_model.hpp"
#include "sketchgen/sketch/equivalence.hpp"
#include "sketchgen/sketch/geometry.hpp"
#include "sketchgen/sketch/json.hpp"
#include "sketchgen/sketch/validate.hpp"
#include "sketchgen/solid/constraints.hpp"
#include "sketchgen/solid/mesh.hpp"
#include "sketchgen/solid/profile.hpp"
#include "sketchgen/tokens/curve_tokens.hpp"
#include "sketchgen/tokens/turtle_tokens.hpp"
#include "sketchgen/tokens/vertex_tokens.hpp"
#include "sketchgen/turtle/encode.hpp"
#include "sketchgen/turtle/execute.hpp"
#include "sketchgen/turtle/text.hpp"

using namespace sketchgen;
namespace fx = sketchgen::testing;
namespace fs = std::filesystem;
using sketch::Point2;
using sketch::SketchHypergraph;
using sketch::Vertex;

namespace {

// Tolerances and limits.
constexpr double kPlateTolerance = 1e-6;
constexpr double kRecoveryTolerance = 1e-6;
constexpr double kBruteForceResolution = 1e-3;
constexpr double kGradientTolerance = 1e-4;
constexpr double kGradientStep = 1e-4;
constexpr double kGradientFloor = 1e-4;
constexpr double kOverfitNll = 0.01;
constexpr double kNucleusTolerance = 1e-9;
constexpr double kUniqueTolerance = 0.05;
constexpr double kBitsTolerance = 1e-9;
constexpr double kCubeTolerance = 1e-9;
constexpr double kCylinderRelTolerance = 0.01;

constexpr double kLimitPlate = 1.0;
constexpr double kLimitGeometry = 10.0;
constexpr double kLimitTokens = 10.0;
constexpr double kLimitModel = 300.0;
constexpr double kLimitDedup = 30.0;
constexpr double kLimitMetrics = 5.0;
constexpr double kLimitSolid = 10.0;
constexpr double kLimitPipeline = 300.0;

struct Check {
    bool pass = true;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(double v, int digits = 9) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

SketchHypergraph plate() { return turtle::execute(turtle::parse(fx::kPlateProgram)); }

// 1. Printed plate program
void plate_round_trip(Check& c) {
    const auto program = turtle::parse(fx::kPlateProgram);
    const auto g = turtle::execute(program);
    c.expect(g.vertices.size() == 9, "9 vertices, got " + std::to_string(g.vertices.size()));
    c.expect(g.edges.size() == 5, "5 edges, got " + std::to_string(g.edges.size()));
    std::multiset<std::size_t> cards;
    for (const auto& e : g.edges) {
        cards.insert(e.vertex_ids.size());
    }
    c.expect(cards == std::multiset<std::size_t>{2, 2, 2, 3, 4}, "cardinalities {2,2,2,3,4}");

    for (const auto& e : g.edges) {
        const auto prim = sketch::recover_primitive(e, g.vertices);
        if (const auto* arc = std::get_if<sketch::Arc>(&prim)) {
            const double err = std::max({std::abs(arc->center.x - 86.0), std::abs(arc->center.y - 128.0),
                                         std::abs(arc->radius - 85.0)});
            c.note("arc center (" + fmt(arc->center.x) + "," + fmt(arc->center.y) + ") r " + fmt(arc->radius));
            c.expect(err < kPlateTolerance, "arc center (86,128) r 85 within 1e-6, max error " + fmt(err, 6));
        } else if (const auto* circle = std::get_if<sketch::Circle>(&prim)) {
            const double err = std::max({std::abs(circle->center.x - 86.0), std::abs(circle->center.y - 128.0),
                                         std::abs(circle->radius - 43.0)});
            c.note("circle center (" + fmt(circle->center.x) + "," + fmt(circle->center.y) + ") r " +
                   fmt(circle->radius));
            c.expect(err < kPlateTolerance, "circle center (86,128) r 43 within 1e-6, max error " + fmt(err, 6));
        }
    }
    const auto exact = fx::exact_circumcircle({86, 213}, {0, 128}, {86, 43});
    c.note("exact circumcircle of the arc points: center (" + std::to_string(exact.cx_num) + "/" +
           std::to_string(exact.den) + ", " + fmt(exact.center_y()) + ") r " + fmt(exact.radius()));
    c.expect(sketch::isomorphic(turtle::execute(turtle::encode(g)), g), "encode then execute is isomorphic");
}

// 2. Geometry oracles
void geometry_oracles(Check& c) {
    util::Rng rng(2024);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        // Arc: three points on a random circle.
        const double cx = rng.uniform01() * 255, cy = rng.uniform01() * 255, r = 1.0 + rng.uniform01() * 127.0;
        const double t0 = rng.uniform01() * 2 * std::numbers::pi;
        const double span = 0.3 + rng.uniform01() * 5.5;
        std::array<Point2, 3> p;
        for (int k = 0; k < 3; ++k) {
            const double t = t0 + span * k / 2.0;
            p[static_cast<std::size_t>(k)] = {cx + r * std::cos(t), cy + r * std::sin(t)};
        }
        const auto fit = sketch::circumcircle(p[0], p[1], p[2]);
        worst = std::max({worst, std::abs(fit.center.x - cx), std::abs(fit.center.y - cy), std::abs(fit.radius - r)});
    }
    for (int i = 0; i < 500; ++i) {
        const double cx = rng.uniform01() * 255, cy = rng.uniform01() * 255, r = 1.0 + rng.uniform01() * 127.0;
        std::vector<Point2> pts;
        for (int k = 0; k < 4; ++k) {
            const double t = 2 * std::numbers::pi * (k + 0.4 * rng.uniform01()) / 4;
            pts.push_back({cx + r * std::cos(t), cy + r * std::sin(t)});
        }
        const auto fit = sketch::fit_circle_lsq(pts);
        worst = std::max({worst, std::abs(fit.center.x - cx), std::abs(fit.center.y - cy), std::abs(fit.radius - r)});
    }
    c.note("real-valued arcs/circles max error " + fmt(worst, 3));
    c.expect(worst < kRecoveryTolerance, "sampled primitives recovered within 1e-6");

    // Grid arcs and circles through recover_primitive against exact arithmetic.
    double worst_grid = 0.0;
    int arcs = 0, circles = 0;
    while (arcs < 1000) {
        std::vector<Vertex> v(3);
        for (auto& q : v) {
            q = {static_cast<int>(rng.uniform_int(256)), static_cast<int>(rng.uniform_int(256))};
        }
        const auto exact = fx::exact_circumcircle(v[0], v[1], v[2]);
        if (exact.den == 0) {
            continue;
        }
        sketch::CurvePrimitive prim;
        try {
            prim = sketch::recover_primitive({{0, 1, 2}}, v);
        } catch (const sketch::CurveRecoveryError&) {
            continue;
        }
        const auto& arc = std::get<sketch::Arc>(prim);
        const double scale = std::max(1.0, exact.radius());
        worst_grid = std::max({worst_grid, std::abs(arc.center.x - exact.center_x()) / scale,
                               std::abs(arc.center.y - exact.center_y()) / scale,
                               std::abs(arc.radius - exact.radius()) / scale});
        ++arcs;
    }
    while (circles < 1000) {
        const int r = 1 + static_cast<int>(rng.uniform_int(127));
        const int cx = r + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(256 - 2 * r)));
        const int cy = r + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(256 - 2 * r)));
        const auto g = fx::circle(cx, cy, r);
        const auto& fit = std::get<sketch::Circle>(sketch::recover_primitive(g.edges[0], g.vertices));
        worst_grid = std::max({worst_grid, std::abs(fit.center.x - cx), std::abs(fit.center.y - cy),
                               std::abs(fit.radius - r)});
        ++circles;
    }
    c.note("grid arcs/circles max error " + fmt(worst_grid, 3));
    c.expect(worst_grid < kRecoveryTolerance, "grid primitives match exact oracle within 1e-6");

    double worst_kasa = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Point2> pts;
        for (int k = 0; k < 8; ++k) {
            const double t = 2 * std::numbers::pi * k / 8;
            pts.push_back({std::cos(t) + (rng.uniform01() - 0.5) * 0.1, std::sin(t) + (rng.uniform01() - 0.5) * 0.1});
        }
        const auto fit = sketch::fit_circle_lsq(pts);
        const auto brute = fx::brute_force_kasa(pts, kBruteForceResolution);
        worst_kasa = std::max({worst_kasa, std::abs(fit.center.x - brute.a), std::abs(fit.center.y - brute.b),
                               std::abs(fit.radius - brute.r)});
    }
    c.note("noisy Kasa vs brute force max difference " + fmt(worst_kasa, 3));
    c.expect(worst_kasa <= kBruteForceResolution, "noisy Kasa fit within grid resolution 1e-3");
}

// 3. Tokenizer inverses
void tokenizer_inverses(Check& c) {
    util::Rng rng(77);
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto g = tokens::sort_vertices(fx::random_sketch(rng));
        failures += tokens::decode_vertices(tokens::encode_vertices(g)) != g.vertices;
        failures += tokens::decode_curves(tokens::encode_curves(g), g.vertices.size()) !=
                    tokens::canonical_curves(g.edges);
        const auto p = fx::random_program(rng);
        failures += tokens::decode_turtle(tokens::encode_turtle(p)) != p;
        failures += turtle::parse(turtle::serialize(p)) != p;
    }
    c.note("4000 round trips, " + std::to_string(failures) + " mismatches");
    c.expect(failures == 0, "all round trips exact");
}

// 4. Model correctness
void model_correctness(Check& c) {
    model::ModelConfig tiny;
    tiny.blocks = 1;
    tiny.heads = 2;
    tiny.output_dim = 8;
    tiny.hidden_dim = 16;
    tiny.vocab_size = 8;
    tiny.max_len = 16;
    tiny.seed = 3;
    model::VertexModel m(tiny);
    const std::vector<int> seq{1, 5, 2, 2, 6, 7};
    m.parameters().zero_grad();
    model::Tape tape;
    tape.backward(m.loss(tape, seq, nullptr));
    const auto grad = fx::check_gradients(m.parameters(), [&] { return m.nll(seq); }, kGradientStep, 1000000,
                                          kGradientFloor);
    c.note("gradient max relative error " + fmt(grad.max_relative_error, 3) + " over " +
           std::to_string(grad.checked) + " entries");
    c.expect(grad.max_relative_error < kGradientTolerance, "gradient check below 1e-4");

    bool causal = true;
    const auto base = m.forward(seq);
    for (std::size_t k = 0; k < seq.size(); ++k) {
        auto changed = seq;
        changed[k] = (changed[k] + 3) % 7;
        const auto out = m.forward(changed);
        for (std::size_t t = 0; t <= k; ++t) {
            causal = causal && out[t] == base[t];
        }
    }
    c.expect(causal, "causality");

    model::ModelConfig cfg;
    cfg.max_len = 32;
    cfg.seed = 1;
    model::VertexModel big(cfg);
    const auto target = model::vertex_sequence(fx::rectangle(20, 30, 200, 90));
    model::TrainOptions opt;
    opt.steps = 500;
    opt.learning_rate = 3e-3;
    opt.batch_size = 1;
    opt.seed = 2;
    const std::vector<std::vector<int>> corpus{target};
    model::train(big, corpus, opt);
    const double nll = big.nll(target);
    c.note("overfit nll " + fmt(nll, 3) + " nats");
    c.expect(nll < kOverfitNll, "overfit nll below 0.01");
    model::SampleOptions greedy;
    greedy.top_p = 1e-9;
    c.expect(big.sample(greedy).tokens == target, "greedy decoding reproduces the sequence");

    const std::vector<double> probs{0.5, 0.3, 0.15, 0.05};
    const auto kept = model::nucleus(probs, 0.8);
    c.expect(kept.size() == 2 && std::abs(kept[0].second - 0.625) < kNucleusTolerance &&
                 std::abs(kept[1].second - 0.375) < kNucleusTolerance,
             "nucleus renormalizes to [0.625, 0.375]");
}

// 5. Dedup semantics
SketchHypergraph dedup_class(int k) {
    switch (k) {
    case 0: return fx::rectangle(0, 0, 40, 20);
    case 1: return SketchHypergraph{{{0, 0}, {40, 0}, {0, 30}}, {{{0, 1}}, {{1, 2}}, {{2, 0}}}};
    case 2: return fx::circle(20, 20, 20);
    case 3: return fx::combine({fx::rectangle(0, 0, 60, 60), fx::circle(30, 30, 10)});
    default:
        return SketchHypergraph{{{0, 0}, {60, 0}, {60, 20}, {20, 20}, {20, 60}, {0, 60}},
                                {{{0, 1}}, {{1, 2}}, {{2, 3}}, {{3, 4}}, {{4, 5}}, {{5, 0}}}};
    }
}

void dedup_semantics(Check& c) {
    util::Rng rng(5);
    std::vector<SketchHypergraph> corpus;
    for (int i = 0; i < 100; ++i) {
        const auto base = dedup_class(i % 5);
        const int s = 1 + static_cast<int>(rng.uniform_int(3));
        const int dx = static_cast<int>(rng.uniform_int(60)), dy = static_cast<int>(rng.uniform_int(60));
        corpus.push_back(fx::shuffled(fx::translated(fx::scaled(base, s), dx, dy), rng));
    }
    rng.shuffle(corpus);
    const auto res = dedup::filter_dataset(corpus);
    c.note("100 sketches kept " + std::to_string(res.kept.size()));
    c.expect(res.kept.size() == 5, "5 classes survive");

    int mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto g = fx::random_sketch(rng);
        const auto key = dedup::dedup_key(g);
        SketchHypergraph t;
        switch (i % 3) {
        case 0: t = fx::scaled(g, 2 + static_cast<int>(rng.uniform_int(3))); break;
        case 1:
            t = fx::translated(g, static_cast<int>(rng.uniform_int(200)) - 100,
                               static_cast<int>(rng.uniform_int(200)) - 100);
            break;
        default: t = fx::shuffled(g, rng); break;
        }
        mismatches += dedup::dedup_key(t) != key;
    }
    c.note("10000 invariance cases, " + std::to_string(mismatches) + " mismatches");
    c.expect(mismatches == 0, "scale/translation/order invariance");
}

// 6. Metrics
void metrics_checks(Check& c) {
    const auto a = fx::rectangle(0, 0, 90, 50);
    const auto b = fx::circle(100, 100, 30);
    const auto d = fx::combine({fx::rectangle(0, 0, 50, 50), fx::circle(150, 150, 20)});
    const SketchHypergraph bad{{{0, 0}, {0, 0}}, {{{0, 1}}}};
    const std::vector<SketchHypergraph> aab{a, a, b};
    const double unique = metrics::unique_pct(aab);
    c.note("unique " + fmt(unique, 4));
    c.expect(std::abs(unique - 66.7) < kUniqueTolerance, "unique 66.7% for [A,A,B]");
    const std::vector<SketchHypergraph> four{a, b, d, bad};
    c.expect(metrics::valid_pct(four) == 75.0, "valid 75% for one bad of four");
    const std::vector<SketchHypergraph> train{a};
    const std::vector<SketchHypergraph> member{a};
    const std::vector<SketchHypergraph> fresh{b};
    c.expect(metrics::novel_pct(member, train) == 0.0 && metrics::novel_pct(fresh, train) == 100.0,
             "training-set member is not novel");

    model::ModelConfig cfg;
    cfg.vocab_size = 256;
    cfg.blocks = 1;
    cfg.heads = 2;
    cfg.output_dim = 8;
    cfg.hidden_dim = 16;
    cfg.max_len = 64;
    model::VertexModel m(cfg);
    auto& p = m.parameters();
    p[p.find("head.weight")].value.setZero();
    p[p.find("head.bias")].value.setZero();
    util::Rng rng(6);
    std::vector<metrics::LikelihoodSample> samples;
    for (int i = 0; i < 10; ++i) {
        const std::size_t n = 1 + rng.uniform_int(20);
        std::vector<int> toks;
        for (std::size_t k = 0; k < 2 * n; ++k) {
            toks.push_back(static_cast<int>(rng.uniform_int(255)));
        }
        samples.push_back({m.nll(toks), n});
    }
    const double bits = metrics::bits_per_vertex(samples);
    c.note("uniform bits/vertex " + fmt(bits, 15));
    c.expect(std::abs(bits - 16.0) < kBitsTolerance, "uniform model gives 16 bits/vertex");
}

// 7. Solid
void solid_checks(Check& c) {
    bool closed = true;
    auto track = [&](const solid::SolidMesh& m) {
        closed = closed && solid::is_watertight(m) && solid::is_consistently_oriented(m);
        return m;
    };
    const auto cube = track(solid::extrude(solid::build_profiles(fx::rectangle(0, 0, 1, 1)), 1.0));
    const double cube_volume = solid::signed_volume(cube);
    c.note("cube volume " + fmt(cube_volume, 15) + ", " + std::to_string(cube.triangles.size()) + " triangles");
    c.expect(std::abs(cube_volume - 1.0) < kCubeTolerance && cube.triangles.size() == 12, "unit cube");

    const double r = 50, h = 10, expected = std::numbers::pi * r * r * h;
    const auto cyl = track(solid::extrude(solid::build_profiles(fx::circle(128, 128, 50), 64), h));
    const double rel = std::abs(solid::signed_volume(cyl) - expected) / expected;
    c.note("cylinder relative volume error " + fmt(rel, 3));
    c.expect(rel < kCylinderRelTolerance, "cylinder within 1%");

    track(solid::extrude(solid::build_profiles(plate()), 5.0));
    track(solid::extrude(solid::build_profiles(fx::combine({fx::rectangle(0, 0, 100, 100),
                                                            fx::rectangle(30, 30, 70, 70)})),
                         2.0));
    c.expect(closed, "all meshes watertight and consistently oriented");

    util::Rng rng(17);
    bool exact = true, idempotent = true;
    for (int i = 0; i < 50; ++i) {
        auto g = fx::rectangle(40, 60, 200, 140);
        for (auto& v : g.vertices) {
            v.x += static_cast<int>(rng.uniform_int(3)) - 1;
            v.y += static_cast<int>(rng.uniform_int(3)) - 1;
        }
        const auto snapped = solid::snap_constraints(g, solid::detect_constraints(g)).sketch;
        const auto& v = snapped.vertices;
        exact = exact && v.size() == 4 && v[0].y == v[1].y && v[1].x == v[2].x && v[2].y == v[3].y &&
                v[3].x == v[0].x;
        idempotent = idempotent && solid::snap_constraints(snapped, solid::detect_constraints(snapped)).sketch == snapped;
    }
    c.expect(exact, "snapping yields an exact rectangle");
    c.expect(idempotent, "snapping is idempotent");
}

// 8. End-to-end determinism
struct CliResult {
    int code = 0;
    std::string err;
};

CliResult cli_run(std::vector<std::string> args) {
    args.insert(args.begin(), "sketchgen");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void pipeline(Check& c) {
    const fs::path dir = fs::temp_directory_path() / "sketchgen_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    util::Rng rng(8);
    {
        std::ofstream corpus(dir / "train.ndjson");
        for (int i = 0; i < 40; ++i) {
            const int x0 = static_cast<int>(rng.uniform_int(100)), y0 = static_cast<int>(rng.uniform_int(100));
            const int x1 = x0 + 20 + static_cast<int>(rng.uniform_int(130));
            const int y1 = y0 + 20 + static_cast<int>(rng.uniform_int(130));
            corpus << sketch::to_json(fx::rectangle(x0, y0, x1, y1)) << '\n';
        }
    }
    auto step = [&](const std::string& name, std::vector<std::string> args) {
        const auto r = cli_run(std::move(args));
        c.expect(r.code == 0, name + " exit code " + std::to_string(r.code) + ": " + r.err);
        return r;
    };
    const auto model = (dir / "toy.json").string();
    step("train", {"train", (dir / "train.ndjson").string(), "-o", model, "--seed", "1", "--steps", "400", "--lr",
                   "3e-3", "--blocks", "1", "--heads", "2", "--output-dim", "16", "--hidden-dim", "32"});
    const auto a = (dir / "a.ndjson").string(), b = (dir / "b.ndjson").string();
    step("sample", {"sample", "--model", model, "--seed", "7", "-n", "100", "-o", a});
    step("sample", {"sample", "--model", model, "--seed", "7", "-n", "100", "-o", b});
    const auto first = slurp(a);
    c.expect(!first.empty() && first == slurp(b), "sample --seed 7 twice is byte-identical");

    const auto valid = (dir / "valid.ndjson").string(), report = (dir / "report.json").string();
    step("validate", {"validate", a, "-o", valid, "--report", report});
    const auto j = nlohmann::json::parse(slurp(report));
    c.note("valid_pct " + fmt(j["valid_pct"].get<double>(), 4) + " over " + std::to_string(j["total"].get<int>()) +
           " samples");
    step("render-svg", {"render-svg", valid, "--out-dir", (dir / "svg").string()});
    step("render-svg all", {"render-svg", a, "--out-dir", (dir / "svg_all").string()});
    step("extrude", {"extrude", valid, "--out-dir", (dir / "obj").string()});
    step("extrude all", {"extrude", a, "--out-dir", (dir / "obj_all").string()});
    fs::remove_all(dir);
}

struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<void(Check&)> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"printed program round trip", kLimitPlate, plate_round_trip},
        {"geometry oracles", kLimitGeometry, geometry_oracles},
        {"tokenizer inverses", kLimitTokens, tokenizer_inverses},
        {"model correctness", kLimitModel, model_correctness},
        {"dedup semantics", kLimitDedup, dedup_semantics},
        {"metrics", kLimitMetrics, metrics_checks},
        {"solid", kLimitSolid, solid_checks},
        {"end-to-end determinism", kLimitPipeline, pipeline},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.expect(elapsed < criteria[i].limit_seconds,
                     "runtime " + fmt(elapsed, 3) + " s over limit " + fmt(criteria[i].limit_seconds, 3) + " s");
        failed += !check.pass;
        std::printf("criterion %zu %s: %s (%.2f s, limit %.0f s)\n", i + 1, check.pass ? "PASS" : "FAIL",
                    criteria[i].name, elapsed, criteria[i].limit_seconds);
        for (const auto& n : check.notes) {
            std::printf("    %s\n", n.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
