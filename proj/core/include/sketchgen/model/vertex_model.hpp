#pragma once

#include <span>
#include <vector>

#include "sketchgen/model/autograd.hpp"
#include "sketchgen/model/config.hpp"
#include "sketchgen/model/layers.hpp"
#include "sketchgen/model/sampling.hpp"

namespace sketchgen::model {

// Decoder-only Transformer over a flat token vocabulary. The last
// vocabulary id terminates a sequence. Used for the CurveGen vertex model
// (vocabulary 257, stop 256).
class VertexModel {
public:
    explicit VertexModel(const ModelConfig& config);

    const ModelConfig& config() const { return config_; }
    ParameterSet& parameters() { return params_; }
    const ParameterSet& parameters() const { return params_; }
    int stop_token() const { return config_.vocab_size - 1; }

    // Next-token distributions after each prefix of `prefix`: entry t
    // conditions on prefix[0..t), so the result has prefix.size() + 1 rows.
    std::vector<StepDistribution> forward(std::span<const int> prefix) const;

    // -sum log p(seq[t] | seq[0..t)) in nats.
    double nll(std::span<const int> seq) const;

    // Same quantity on a recording tape, bound to the trainable parameters.
    // `rng` enables dropout.
    Var loss(Tape& tape, std::span<const int> seq, util::Rng* rng);

    // Autoregressive nucleus sampling until the stop token or max_len tokens.
    SampleResult sample(const SampleOptions& options) const;

private:
    Var logits(const Context& ctx, std::span<const int> inputs) const;
    void check_tokens(std::span<const int> tokens, std::size_t limit) const;

    ModelConfig config_;
    ParameterSet params_;
    std::size_t token_embedding_ = 0;
    std::size_t bos_ = 0;
    std::size_t position_embedding_ = 0;
    Stack decoder_;
    Linear head_;
};

} // namespace sketchgen::model
