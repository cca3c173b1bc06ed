#pragma once

#include <span>
#include <vector>

#include "sketchgen/model/autograd.hpp"
#include "sketchgen/model/config.hpp"
#include "sketchgen/model/layers.hpp"
#include "sketchgen/model/sampling.hpp"
#include "sketchgen/sketch/types.hpp"

namespace sketchgen::model {

// Pointer decoder conditioned on a vertex set. An unmasked encoder embeds
// the vertices; the causal decoder cross-attends to that memory, and its
// logits are scaled dot products against the encoded vertices followed by
// two learned rows for end-of-curve (n) and end-of-sketch (n + 1).
class CurveModel {
public:
    explicit CurveModel(const ModelConfig& config);

    const ModelConfig& config() const { return config_; }
    ParameterSet& parameters() { return params_; }
    const ParameterSet& parameters() const { return params_; }

    // Distributions over n + 2 pointer targets after each prefix of `prefix`.
    std::vector<StepDistribution> forward(std::span<const sketch::Vertex> vertices,
                                          std::span<const int> prefix) const;
    double nll(std::span<const sketch::Vertex> vertices, std::span<const int> tokens) const;
    Var loss(Tape& tape, std::span<const sketch::Vertex> vertices, std::span<const int> tokens, util::Rng* rng);
    // Samples until end-of-sketch or max_len tokens.
    SampleResult sample(std::span<const sketch::Vertex> vertices, const SampleOptions& options) const;

private:
    Var logits(const Context& ctx, std::span<const sketch::Vertex> vertices, std::span<const int> inputs) const;
    void check(std::span<const sketch::Vertex> vertices, std::span<const int> tokens) const;

    ModelConfig config_;
    ParameterSet params_;
    std::size_t x_embedding_ = 0;
    std::size_t y_embedding_ = 0;
    std::size_t specials_ = 0;
    std::size_t bos_ = 0;
    std::size_t position_embedding_ = 0;
    Stack encoder_;
    Stack decoder_;
    Linear pointer_;
};

} // namespace sketchgen::model
