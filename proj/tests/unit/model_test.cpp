#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sketchgen/model/checkpoint.hpp"
#include "sketchgen/model/curve_model.hpp"
#include "sketchgen/model/generators.hpp"
#include "sketchgen/model/sampling.hpp"
#include "sketchgen/model/training.hpp"
#include "sketchgen/model/turtle_model.hpp"
#include "sketchgen/model/vertex_model.hpp"
#include "sketchgen/tokens/turtle_tokens.hpp"
#include "sketchgen/turtle/text.hpp"

using namespace sketchgen;
namespace fx = sketchgen::testing;
using namespace sketchgen::model;

namespace {

ModelConfig tiny(ModelKind kind, int vocab) {
    ModelConfig c;
    c.kind = kind;
    c.blocks = 1;
    c.heads = 2;
    c.output_dim = 8;
    c.hidden_dim = 16;
    c.vocab_size = vocab;
    c.max_len = 16;
    c.seed = 3;
    return c;
}

std::vector<tokens::TurtleTokenRow> plate_rows() { return tokens::encode_turtle(turtle::parse(fx::kPlateProgram)); }

} // namespace

TEST(Autograd, LogSoftmaxRowsNormalized) {
    Matrix m(2, 3);
    m << 1000, 1001, 1002, -5, 0, 5;
    const Matrix l = log_softmax_rows(m);
    for (Eigen::Index r = 0; r < 2; ++r) {
        EXPECT_NEAR(l.row(r).array().exp().sum(), 1.0, 1e-12);
    }
    EXPECT_NEAR(l(0, 2) - l(0, 1), 1.0, 1e-12);
}

TEST(Autograd, PrimitiveOpsMatchFiniteDifferences) {
    util::Rng rng(1);
    ParameterSet params;
    const auto a = params.add("a", random_normal(3, 4, 1.0, rng));
    const auto b = params.add("b", random_normal(5, 4, 1.0, rng));
    const auto g = params.add("g", random_normal(1, 5, 1.0, rng));
    const auto beta = params.add("beta", random_normal(1, 5, 1.0, rng));
    const std::vector<int> targets{1, 4, 0};
    auto build = [&](Tape& t) {
        Var x = t.matmul_bt(t.param(params, a), t.param(params, b));
        x = t.layer_norm(x, t.param(params, g), t.param(params, beta));
        x = t.gelu(x);
        x = t.softmax_rows(x, true);
        x = t.add(x, t.scale(t.slice_cols(t.concat_cols(std::vector<Var>{x, x}), 5, 5), 0.5));
        return t.cross_entropy(t.scale(x, 3.0), targets);
    };
    params.zero_grad();
    Tape tape;
    tape.backward(build(tape));
    const auto check = fx::check_gradients(params, [&] {
        Tape t(false);
        return t.scalar(build(t));
    }, 1e-3, 100);
    EXPECT_LT(check.max_relative_error, 1e-6);
    EXPECT_EQ(check.checked, params.scalar_count());
}

TEST(VertexModelTest, GradientMatchesFiniteDifferences) {
    VertexModel m(tiny(ModelKind::vertex, 8));
    const std::vector<int> seq{1, 5, 2, 2, 6, 7};
    m.parameters().zero_grad();
    Tape tape;
    tape.backward(m.loss(tape, seq, nullptr));
    const auto check = fx::check_gradients(m.parameters(), [&] { return m.nll(seq); }, 1e-4, 40, 1e-4);
    EXPECT_LT(check.max_relative_error, 1e-4) << check.worst_analytic << " vs " << check.worst_numeric;
    EXPECT_GT(check.checked, 100u);
}

TEST(CurveModelTest, GradientMatchesFiniteDifferences) {
    CurveModel m(tiny(ModelKind::curve, 256));
    const std::vector<sketch::Vertex> verts{{0, 0}, {10, 0}, {10, 10}};
    const std::vector<int> seq{0, 1, 3, 1, 2, 3, 0, 2, 3, 4};
    m.parameters().zero_grad();
    Tape tape;
    tape.backward(m.loss(tape, verts, seq, nullptr));
    const auto check = fx::check_gradients(m.parameters(), [&] { return m.nll(verts, seq); }, 1e-4, 40, 1e-4);
    EXPECT_LT(check.max_relative_error, 1e-4) << check.worst_analytic << " vs " << check.worst_numeric;
}

TEST(TurtleModelTest, GradientMatchesFiniteDifferences) {
    TurtleModel m(tiny(ModelKind::turtle, 0));
    const auto rows = plate_rows();
    m.parameters().zero_grad();
    Tape tape;
    tape.backward(m.loss(tape, rows, nullptr));
    const auto check = fx::check_gradients(m.parameters(), [&] { return m.nll(rows); }, 1e-4, 20, 1e-4);
    EXPECT_LT(check.max_relative_error, 1e-4) << check.worst_analytic << " vs " << check.worst_numeric;
}

TEST(VertexModelTest, Causality) {
    VertexModel m(tiny(ModelKind::vertex, 8));
    std::vector<int> seq{1, 5, 2, 2, 6, 3};
    const auto base = m.forward(seq);
    ASSERT_EQ(base.size(), seq.size() + 1);
    for (std::size_t k = 0; k < seq.size(); ++k) {
        auto changed = seq;
        changed[k] = (changed[k] + 3) % 7;
        const auto out = m.forward(changed);
        for (std::size_t t = 0; t <= k; ++t) {
            for (std::size_t v = 0; v < out[t].size(); ++v) {
                EXPECT_EQ(out[t][v], base[t][v]) << "row " << t << " saw token " << k;
            }
        }
        double diff = 0.0;
        for (std::size_t v = 0; v < out[k + 1].size(); ++v) {
            diff += std::abs(out[k + 1][v] - base[k + 1][v]);
        }
        EXPECT_GT(diff, 0.0);
    }
}

TEST(CurveModelTest, CausalityAndDistributionSize) {
    CurveModel m(tiny(ModelKind::curve, 256));
    const std::vector<sketch::Vertex> verts{{0, 0}, {10, 0}, {10, 10}, {0, 10}};
    std::vector<int> seq{0, 1, 4, 1, 2, 4};
    const auto base = m.forward(verts, seq);
    ASSERT_EQ(base.size(), seq.size() + 1);
    EXPECT_EQ(base[0].size(), verts.size() + 2);
    for (std::size_t k = 0; k < seq.size(); ++k) {
        auto changed = seq;
        changed[k] = (changed[k] + 1) % 5;
        const auto out = m.forward(verts, changed);
        for (std::size_t t = 0; t <= k; ++t) {
            EXPECT_EQ(out[t], base[t]);
        }
    }
}

TEST(TurtleModelTest, Causality) {
    TurtleModel m(tiny(ModelKind::turtle, 0));
    const auto rows = plate_rows();
    const auto base = m.forward(rows);
    ASSERT_EQ(base.size(), rows.size());
    for (std::size_t k = 1; k < rows.size(); ++k) {
        auto changed = rows;
        changed[k].coords[0] = (changed[k].coords[0] + 17) % tokens::kTurtleCoordVocab;
        const auto out = m.forward(changed);
        for (std::size_t t = 0; t < k; ++t) {
            EXPECT_EQ(out[t].command, base[t].command);
            EXPECT_EQ(out[t].coords, base[t].coords);
        }
    }
}

TEST(Sampling, NucleusExample) {
    const std::vector<double> p{0.5, 0.3, 0.15, 0.05};
    const auto kept = nucleus(p, 0.8);
    ASSERT_EQ(kept.size(), 2u);
    EXPECT_EQ(kept[0].first, 0);
    EXPECT_EQ(kept[1].first, 1);
    EXPECT_NEAR(kept[0].second, 0.625, 1e-9);
    EXPECT_NEAR(kept[1].second, 0.375, 1e-9);
}

TEST(Sampling, NucleusEdgeCases) {
    const std::vector<double> p{0.1, 0.6, 0.3};
    EXPECT_EQ(nucleus(p, 1.0).size(), 3u);
    EXPECT_EQ(nucleus(p, 0.01).size(), 1u);
    EXPECT_EQ(nucleus(p, 0.01)[0].first, 1);
    EXPECT_THROW(nucleus(p, 0.0), std::invalid_argument);
    EXPECT_THROW(nucleus(p, 1.5), std::invalid_argument);
}

TEST(Sampling, NucleusSamplingFrequencies) {
    const std::vector<double> p{0.5, 0.3, 0.15, 0.05};
    util::Rng rng(4);
    std::array<int, 4> counts{};
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        ++counts[static_cast<std::size_t>(sample_nucleus(p, 0.8, rng))];
    }
    EXPECT_EQ(counts[2] + counts[3], 0);
    EXPECT_NEAR(counts[0] / static_cast<double>(n), 0.625, 0.01);
}

TEST(Sampling, DeriveSeedSpreads) {
    EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
    EXPECT_NE(derive_seed(7, 3), derive_seed(7, 4));
    EXPECT_NE(derive_seed(7, 3), derive_seed(8, 3));
}

TEST(VertexModelTest, OverfitsOneSketch) {
    ModelConfig c;
    c.kind = ModelKind::vertex;
    c.max_len = 32;
    c.seed = 1;
    VertexModel m(c);
    const auto seq = vertex_sequence(fx::rectangle(20, 30, 200, 90));
    TrainOptions opt;
    opt.steps = 500;
    opt.learning_rate = 3e-3;
    opt.batch_size = 1;
    opt.seed = 2;
    const std::vector<std::vector<int>> corpus{seq};
    const auto res = train(m, corpus, opt);
    EXPECT_LT(m.nll(seq), 0.01);
    EXPECT_LT(res.losses.back(), res.losses.front());
    SampleOptions so;
    so.top_p = 1e-6;
    so.seed = 5;
    const auto s = m.sample(so);
    EXPECT_EQ(s.tokens, seq);
    EXPECT_FALSE(s.truncated);
}

TEST(Training, SameSeedSameParameters) {
    const std::vector<std::vector<int>> corpus{{1, 2, 3, 7}, {4, 4, 7}, {5, 6, 1, 2, 7}};
    TrainOptions opt;
    opt.steps = 20;
    opt.batch_size = 2;
    opt.seed = 11;
    VertexModel a(tiny(ModelKind::vertex, 8));
    VertexModel b(tiny(ModelKind::vertex, 8));
    train(a, corpus, opt);
    train(b, corpus, opt);
    for (std::size_t i = 0; i < a.parameters().size(); ++i) {
        EXPECT_EQ(a.parameters()[i].value, b.parameters()[i].value);
    }
}

TEST(Training, ValidationRestoresBestAndDecays) {
    const std::vector<std::vector<int>> corpus{{1, 2, 3, 7}, {4, 4, 7}};
    const std::vector<std::vector<int>> held{{6, 6, 6, 6, 7}};
    TrainOptions opt;
    opt.steps = 60;
    opt.learning_rate = 2e-2;
    opt.batch_size = 2;
    opt.validate_every = 5;
    opt.plateau_patience = 1;
    VertexModel m(tiny(ModelKind::vertex, 8));
    const auto res = train(m, corpus, opt, held);
    ASSERT_FALSE(res.validation.empty());
    EXPECT_GE(res.best_step, 0);
    EXPECT_NEAR(m.nll(held[0]), res.best_validation, 1e-9);
    EXPECT_LE(res.final_learning_rate, opt.learning_rate);
}

TEST(Generators, SamplingIsDeterministicPerSeed) {
    ModelConfig shape = tiny(ModelKind::vertex, 257);
    const auto [vc, cc] = curvegen_configs(shape, 12, 40);
    CurveGen gen{VertexModel(vc), CurveModel(cc)};
    GenerateOptions opt;
    opt.count = 4;
    opt.seed = 7;
    const auto a = sample_curvegen(gen, opt);
    EXPECT_EQ(a, sample_curvegen(gen, opt));
    opt.count = 2;
    const auto prefix = sample_curvegen(gen, opt);
    EXPECT_EQ(prefix[0], a[0]);
    EXPECT_EQ(prefix[1], a[1]);
}

TEST(Generators, TurtlePrefixes) {
    const auto rows = plate_rows();
    const std::vector<std::vector<tokens::TurtleTokenRow>> seqs{rows, rows};
    const auto prefixes = turtle_prefixes(seqs);
    ASSERT_EQ(prefixes.size(), 1u);
    EXPECT_EQ(prefixes[0].size(), 1 + kTurtlePrefixCommands);
}

TEST(Generators, TurtleGenTrainsAndSamples) {
    std::vector<sketch::SketchHypergraph> sketches;
    util::Rng rng(3);
    for (int i = 0; i < 4; ++i) {
        sketches.push_back(fx::random_sketch(rng));
    }
    TurtleGen gen{TurtleModel(turtlegen_config(tiny(ModelKind::turtle, 0), 40)), {}};
    TrainOptions opt;
    opt.steps = 5;
    train_turtlegen(gen, sketches, opt);
    EXPECT_FALSE(gen.prefixes.empty());
    GenerateOptions go;
    go.count = 3;
    go.seed = 1;
    EXPECT_EQ(sample_turtlegen(gen, go), sample_turtlegen(gen, go));
}

TEST(Checkpoint, RoundTripCurveGen) {
    const auto [vc, cc] = curvegen_configs(tiny(ModelKind::vertex, 257), 12, 40);
    const Generator gen = CurveGen{VertexModel(vc), CurveModel(cc)};
    const auto text = serialize_checkpoint(gen);
    const auto back = parse_checkpoint(text);
    EXPECT_EQ(serialize_checkpoint(back), text);
    const std::vector<int> seq{0, 0, 43, 255, 256};
    EXPECT_EQ(std::get<CurveGen>(back).vertex.nll(seq), std::get<CurveGen>(gen).vertex.nll(seq));
}

TEST(Checkpoint, RoundTripTurtleGen) {
    TurtleGen t{TurtleModel(turtlegen_config(tiny(ModelKind::turtle, 0), 20)), {}};
    auto rows = plate_rows();
    rows.resize(1 + kTurtlePrefixCommands);
    t.prefixes.push_back(rows);
    const Generator gen = t;
    const auto text = serialize_checkpoint(gen);
    const auto back = parse_checkpoint(text);
    EXPECT_EQ(serialize_checkpoint(back), text);
    EXPECT_EQ(std::get<TurtleGen>(back).prefixes, t.prefixes);
}

TEST(Checkpoint, RejectsBadDocuments) {
    EXPECT_THROW(parse_checkpoint("{}"), CheckpointError);
    EXPECT_THROW(parse_checkpoint("{\"format\":\"sketchgen-checkpoint\",\"version\":99}"), CheckpointError);
    EXPECT_THROW(parse_checkpoint("nope"), CheckpointError);
}

TEST(Config, Validation) {
    ModelConfig c;
    EXPECT_NO_THROW(validate_config(c));
    c.heads = 3;
    EXPECT_THROW(validate_config(c), ConfigError);
    c = ModelConfig{};
    c.dropout = 1.0;
    EXPECT_THROW(validate_config(c), ConfigError);
    EXPECT_EQ(model_kind_from_string("curve"), ModelKind::curve);
    EXPECT_THROW(model_kind_from_string("bogus"), InputError);
}
