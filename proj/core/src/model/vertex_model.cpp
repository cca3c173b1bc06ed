#include "sketchgen/model/vertex_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sketchgen::model {

namespace {

std::vector<int> iota_rows(std::size_t n) {
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    return rows;
}

} // namespace

VertexModel::VertexModel(const ModelConfig& config) : config_(config) {
    validate_config(config_);
    util::Rng rng(config_.seed);
    const int d = config_.output_dim;
    token_embedding_ = params_.add("token_embedding", random_normal(config_.vocab_size, d, 0.02, rng));
    bos_ = params_.add("bos", random_normal(1, d, 0.02, rng));
    position_embedding_ = params_.add("position_embedding", random_normal(config_.max_len + 1, d, 0.02, rng));
    decoder_ = Stack::create(params_, "decoder", config_.blocks, d, config_.hidden_dim, config_.heads, false, rng);
    head_ = Linear::create(params_, "head", d, config_.vocab_size, rng);
}

void VertexModel::check_tokens(std::span<const int> tokens, std::size_t limit) const {
    if (tokens.size() > limit) {
        throw std::invalid_argument("sequence length " + std::to_string(tokens.size()) + " exceeds max_len " +
                                    std::to_string(limit));
    }
    for (int t : tokens) {
        if (t < 0 || t >= config_.vocab_size) {
            throw std::invalid_argument("token " + std::to_string(t) + " is outside the vocabulary");
        }
    }
}

Var VertexModel::logits(const Context& ctx, std::span<const int> inputs) const {
    auto& t = ctx.tape;
    Var x = ctx.get(bos_);
    if (!inputs.empty()) {
        x = t.concat_rows(x, t.gather_rows(ctx.get(token_embedding_), inputs));
    }
    const auto positions = iota_rows(inputs.size() + 1);
    x = apply_dropout(ctx, t.add(x, t.gather_rows(ctx.get(position_embedding_), positions)));
    return head_(ctx, decoder_(ctx, x, true));
}

std::vector<StepDistribution> VertexModel::forward(std::span<const int> prefix) const {
    check_tokens(prefix, static_cast<std::size_t>(config_.max_len));
    Tape tape(false);
    const Context ctx{tape, params_};
    return softmax_distributions(tape.value(logits(ctx, prefix)));
}

double VertexModel::nll(std::span<const int> seq) const {
    check_tokens(seq, static_cast<std::size_t>(config_.max_len));
    if (seq.empty()) {
        return 0.0;
    }
    Tape tape(false);
    const Context ctx{tape, params_};
    return tape.scalar(tape.cross_entropy(logits(ctx, seq.first(seq.size() - 1)), seq));
}

Var VertexModel::loss(Tape& tape, std::span<const int> seq, util::Rng* rng) {
    check_tokens(seq, static_cast<std::size_t>(config_.max_len));
    if (seq.empty()) {
        throw std::invalid_argument("cannot train on an empty sequence");
    }
    const Context ctx{tape, params_, &params_, rng, config_.dropout};
    return tape.cross_entropy(logits(ctx, seq.first(seq.size() - 1)), seq);
}

SampleResult VertexModel::sample(const SampleOptions& options) const {
    const auto limit = std::min<std::size_t>(options.max_len, static_cast<std::size_t>(config_.max_len));
    util::Rng rng(options.seed);
    SampleResult result;
    while (result.tokens.size() < limit) {
        Tape tape(false);
        const Context ctx{tape, params_};
        const Matrix& all = tape.value(logits(ctx, result.tokens));
        const auto probs = softmax_distributions(all.bottomRows(1)).front();
        const int token = sample_nucleus(probs, options.top_p, rng);
        result.tokens.push_back(token);
        if (token == stop_token()) {
            return result;
        }
    }
    result.truncated = true;
    return result;
}

} // namespace sketchgen::model
