#pragma once

#include <array>
#include <span>
#include <vector>

#include "sketchgen/model/autograd.hpp"
#include "sketchgen/model/config.hpp"
#include "sketchgen/model/layers.hpp"
#include "sketchgen/model/sampling.hpp"
#include "sketchgen/tokens/turtle_tokens.hpp"

namespace sketchgen::model {

struct TurtleStepDistribution {
    StepDistribution command;
    std::array<StepDistribution, tokens::kTurtleCoordSlots> coords;
};

struct TurtleSampleResult {
    std::vector<tokens::TurtleTokenRow> rows;
    bool truncated = false;
};

// Decoder-only Transformer over turtle rows. A row is embedded as the sum of
// its command and six coordinate embeddings; seven heads predict the next
// row's branches independently given the history.
class TurtleModel {
public:
    explicit TurtleModel(const ModelConfig& config);

    const ModelConfig& config() const { return config_; }
    ParameterSet& parameters() { return params_; }
    const ParameterSet& parameters() const { return params_; }

    // Distribution of the row following each prefix of `rows`; entry t
    // conditions on rows[0..t].
    std::vector<TurtleStepDistribution> forward(std::span<const tokens::TurtleTokenRow> rows) const;
    // Summed over rows 1.. and all seven branches, pads included.
    double nll(std::span<const tokens::TurtleTokenRow> rows) const;
    Var loss(Tape& tape, std::span<const tokens::TurtleTokenRow> rows, util::Rng* rng);
    // Continues `prefix` (which must open with a start row) until an end row
    // or max_len rows. Slots beyond the command's arity are padded.
    TurtleSampleResult sample(std::span<const tokens::TurtleTokenRow> prefix, const SampleOptions& options) const;

private:
    struct Heads {
        Var command;
        std::array<Var, tokens::kTurtleCoordSlots> coords;
    };
    Heads logits(const Context& ctx, std::span<const tokens::TurtleTokenRow> inputs) const;
    Var total_loss(Tape& tape, const Heads& heads, std::span<const tokens::TurtleTokenRow> targets) const;
    void check(std::span<const tokens::TurtleTokenRow> rows) const;

    ModelConfig config_;
    ParameterSet params_;
    std::size_t command_embedding_ = 0;
    std::array<std::size_t, tokens::kTurtleCoordSlots> coord_embeddings_{};
    std::size_t position_embedding_ = 0;
    Stack decoder_;
    Linear command_head_;
    std::array<Linear, tokens::kTurtleCoordSlots> coord_heads_;
};

} // namespace sketchgen::model
