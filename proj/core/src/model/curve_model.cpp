#include "sketchgen/model/curve_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sketchgen::model {

CurveModel::CurveModel(const ModelConfig& config) : config_(config) {
    validate_config(config_);
    util::Rng rng(config_.seed);
    const int d = config_.output_dim;
    x_embedding_ = params_.add("x_embedding", random_normal(config_.vocab_size, d, 0.02, rng));
    y_embedding_ = params_.add("y_embedding", random_normal(config_.vocab_size, d, 0.02, rng));
    specials_ = params_.add("special_targets", random_normal(2, d, 0.02, rng));
    bos_ = params_.add("bos", random_normal(1, d, 0.02, rng));
    position_embedding_ = params_.add("position_embedding", random_normal(config_.max_len + 1, d, 0.02, rng));
    encoder_ = Stack::create(params_, "encoder", config_.blocks, d, config_.hidden_dim, config_.heads, false, rng);
    decoder_ = Stack::create(params_, "decoder", config_.blocks, d, config_.hidden_dim, config_.heads, true, rng);
    pointer_ = Linear::create(params_, "pointer", d, d, rng);
}

void CurveModel::check(std::span<const sketch::Vertex> vertices, std::span<const int> tokens) const {
    if (vertices.empty()) {
        throw std::invalid_argument("curve model needs at least one vertex");
    }
    for (const auto& v : vertices) {
        if (v.x < 0 || v.y < 0 || v.x >= config_.vocab_size || v.y >= config_.vocab_size) {
            throw std::invalid_argument("vertex coordinate outside the model's grid");
        }
    }
    if (tokens.size() > static_cast<std::size_t>(config_.max_len)) {
        throw std::invalid_argument("curve sequence length " + std::to_string(tokens.size()) +
                                    " exceeds max_len " + std::to_string(config_.max_len));
    }
    const auto targets = static_cast<int>(vertices.size()) + 2;
    for (int t : tokens) {
        if (t < 0 || t >= targets) {
            throw std::invalid_argument("pointer token " + std::to_string(t) + " is outside the vocabulary");
        }
    }
}

Var CurveModel::logits(const Context& ctx, std::span<const sketch::Vertex> vertices,
                       std::span<const int> inputs) const {
    auto& t = ctx.tape;
    std::vector<int> xs, ys;
    for (const auto& v : vertices) {
        xs.push_back(v.x);
        ys.push_back(v.y);
    }
    Var enc = t.add(t.gather_rows(ctx.get(x_embedding_), xs), t.gather_rows(ctx.get(y_embedding_), ys));
    enc = encoder_(ctx, apply_dropout(ctx, enc), false);
    const Var targets = t.concat_rows(enc, ctx.get(specials_));

    Var x = ctx.get(bos_);
    if (!inputs.empty()) {
        x = t.concat_rows(x, t.gather_rows(targets, inputs));
    }
    std::vector<int> positions(inputs.size() + 1);
    std::iota(positions.begin(), positions.end(), 0);
    x = apply_dropout(ctx, t.add(x, t.gather_rows(ctx.get(position_embedding_), positions)));
    const Var h = pointer_(ctx, decoder_(ctx, x, true, &enc));
    return t.scale(t.matmul_bt(h, targets), 1.0 / std::sqrt(static_cast<double>(config_.output_dim)));
}

std::vector<StepDistribution> CurveModel::forward(std::span<const sketch::Vertex> vertices,
                                                  std::span<const int> prefix) const {
    check(vertices, prefix);
    Tape tape(false);
    const Context ctx{tape, params_};
    return softmax_distributions(tape.value(logits(ctx, vertices, prefix)));
}

double CurveModel::nll(std::span<const sketch::Vertex> vertices, std::span<const int> tokens) const {
    check(vertices, tokens);
    if (tokens.empty()) {
        return 0.0;
    }
    Tape tape(false);
    const Context ctx{tape, params_};
    return tape.scalar(tape.cross_entropy(logits(ctx, vertices, tokens.first(tokens.size() - 1)), tokens));
}

Var CurveModel::loss(Tape& tape, std::span<const sketch::Vertex> vertices, std::span<const int> tokens,
                     util::Rng* rng) {
    check(vertices, tokens);
    if (tokens.empty()) {
        throw std::invalid_argument("cannot train on an empty sequence");
    }
    const Context ctx{tape, params_, &params_, rng, config_.dropout};
    return tape.cross_entropy(logits(ctx, vertices, tokens.first(tokens.size() - 1)), tokens);
}

SampleResult CurveModel::sample(std::span<const sketch::Vertex> vertices, const SampleOptions& options) const {
    check(vertices, {});
    const auto limit = std::min<std::size_t>(options.max_len, static_cast<std::size_t>(config_.max_len));
    const int stop = static_cast<int>(vertices.size()) + 1;
    util::Rng rng(options.seed);
    SampleResult result;
    while (result.tokens.size() < limit) {
        Tape tape(false);
        const Context ctx{tape, params_};
        const Matrix& all = tape.value(logits(ctx, vertices, result.tokens));
        const auto probs = softmax_distributions(all.bottomRows(1)).front();
        const int token = sample_nucleus(probs, options.top_p, rng);
        result.tokens.push_back(token);
        if (token == stop) {
            return result;
        }
    }
    result.truncated = true;
    return result;
}

} // namespace sketchgen::model
