#include "sketchgen/model/turtle_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sketchgen/turtle/program.hpp"

namespace sketchgen::model {

using tokens::kTurtleCoordSlots;
using tokens::TurtleToken;
using tokens::TurtleTokenRow;

namespace {

std::size_t row_arity(TurtleToken command) {
    switch (command) {
    case TurtleToken::loopstart:
        return turtle::arity(turtle::CommandKind::loopstart);
    case TurtleToken::line:
        return turtle::arity(turtle::CommandKind::line);
    case TurtleToken::arc:
        return turtle::arity(turtle::CommandKind::arc);
    case TurtleToken::circle:
        return turtle::arity(turtle::CommandKind::circle);
    default:
        return 0;
    }
}

} // namespace

TurtleModel::TurtleModel(const ModelConfig& config) : config_(config) {
    config_.kind = ModelKind::turtle;
    validate_config(config_);
    util::Rng rng(config_.seed);
    const int d = config_.output_dim;
    command_embedding_ = params_.add("command_embedding", random_normal(tokens::kTurtleCommandVocab, d, 0.02, rng));
    for (std::size_t k = 0; k < kTurtleCoordSlots; ++k) {
        coord_embeddings_[k] = params_.add("coord_embedding" + std::to_string(k),
                                           random_normal(tokens::kTurtleCoordVocab, d, 0.02, rng));
    }
    position_embedding_ = params_.add("position_embedding", random_normal(config_.max_len, d, 0.02, rng));
    decoder_ = Stack::create(params_, "decoder", config_.blocks, d, config_.hidden_dim, config_.heads, false, rng);
    command_head_ = Linear::create(params_, "command_head", d, tokens::kTurtleCommandVocab, rng);
    for (std::size_t k = 0; k < kTurtleCoordSlots; ++k) {
        coord_heads_[k] = Linear::create(params_, "coord_head" + std::to_string(k), d, tokens::kTurtleCoordVocab, rng);
    }
}

void TurtleModel::check(std::span<const TurtleTokenRow> rows) const {
    if (rows.empty() || rows.front().command != TurtleToken::start) {
        throw std::invalid_argument("turtle rows must open with a start row");
    }
    if (rows.size() > static_cast<std::size_t>(config_.max_len)) {
        throw std::invalid_argument("turtle sequence length " + std::to_string(rows.size()) + " exceeds max_len " +
                                    std::to_string(config_.max_len));
    }
    for (const auto& r : rows) {
        if (static_cast<int>(r.command) >= tokens::kTurtleCommandVocab) {
            throw std::invalid_argument("turtle command outside the vocabulary");
        }
        for (int c : r.coords) {
            if (c < 0 || c >= tokens::kTurtleCoordVocab) {
                throw std::invalid_argument("turtle coordinate token " + std::to_string(c) +
                                            " is outside the vocabulary");
            }
        }
    }
}

TurtleModel::Heads TurtleModel::logits(const Context& ctx, std::span<const TurtleTokenRow> inputs) const {
    auto& t = ctx.tape;
    std::vector<int> commands;
    std::array<std::vector<int>, kTurtleCoordSlots> coords;
    for (const auto& r : inputs) {
        commands.push_back(static_cast<int>(r.command));
        for (std::size_t k = 0; k < kTurtleCoordSlots; ++k) {
            coords[k].push_back(r.coords[k]);
        }
    }
    Var x = t.gather_rows(ctx.get(command_embedding_), commands);
    for (std::size_t k = 0; k < kTurtleCoordSlots; ++k) {
        x = t.add(x, t.gather_rows(ctx.get(coord_embeddings_[k]), coords[k]));
    }
    std::vector<int> positions(inputs.size());
    std::iota(positions.begin(), positions.end(), 0);
    x = apply_dropout(ctx, t.add(x, t.gather_rows(ctx.get(position_embedding_), positions)));
    const Var h = decoder_(ctx, x, true);
    Heads heads;
    heads.command = command_head_(ctx, h);
    for (std::size_t k = 0; k < kTurtleCoordSlots; ++k) {
        heads.coords[k] = coord_heads_[k](ctx, h);
    }
    return heads;
}

Var TurtleModel::total_loss(Tape& tape, const Heads& heads, std::span<const TurtleTokenRow> targets) const {
    std::vector<int> commands;
    std::array<std::vector<int>, kTurtleCoordSlots> coords;
    for (const auto& r : targets) {
        commands.push_back(static_cast<int>(r.command));
        for (std::size_t k = 0; k < kTurtleCoordSlots; ++k) {
            coords[k].push_back(r.coords[k]);
        }
    }
    Var total = tape.cross_entropy(heads.command, commands);
    for (std::size_t k = 0; k < kTurtleCoordSlots; ++k) {
        total = tape.add(total, tape.cross_entropy(heads.coords[k], coords[k]));
    }
    return total;
}

std::vector<TurtleStepDistribution> TurtleModel::forward(std::span<const TurtleTokenRow> rows) const {
    check(rows);
    Tape tape(false);
    const Context ctx{tape, params_};
    const Heads heads = logits(ctx, rows);
    const auto commands = softmax_distributions(tape.value(heads.command));
    std::vector<TurtleStepDistribution> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out[i].command = commands[i];
    }
    for (std::size_t k = 0; k < kTurtleCoordSlots; ++k) {
        const auto dist = softmax_distributions(tape.value(heads.coords[k]));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out[i].coords[k] = dist[i];
        }
    }
    return out;
}

double TurtleModel::nll(std::span<const TurtleTokenRow> rows) const {
    check(rows);
    if (rows.size() < 2) {
        return 0.0;
    }
    Tape tape(false);
    const Context ctx{tape, params_};
    const Heads heads = logits(ctx, rows.first(rows.size() - 1));
    return tape.scalar(total_loss(tape, heads, rows.subspan(1)));
}

Var TurtleModel::loss(Tape& tape, std::span<const TurtleTokenRow> rows, util::Rng* rng) {
    check(rows);
    if (rows.size() < 2) {
        throw std::invalid_argument("cannot train on a sequence without targets");
    }
    const Context ctx{tape, params_, &params_, rng, config_.dropout};
    const Heads heads = logits(ctx, rows.first(rows.size() - 1));
    return total_loss(tape, heads, rows.subspan(1));
}

TurtleSampleResult TurtleModel::sample(std::span<const TurtleTokenRow> prefix, const SampleOptions& options) const {
    check(prefix);
    const auto limit = std::min<std::size_t>(options.max_len, static_cast<std::size_t>(config_.max_len));
    util::Rng rng(options.seed);
    TurtleSampleResult result;
    result.rows.assign(prefix.begin(), prefix.end());
    while (result.rows.size() < limit) {
        Tape tape(false);
        const Context ctx{tape, params_};
        const Heads heads = logits(ctx, result.rows);
        TurtleTokenRow row;
        const auto command_probs = softmax_distributions(tape.value(heads.command).bottomRows(1)).front();
        row.command = static_cast<TurtleToken>(sample_nucleus(command_probs, options.top_p, rng));
        const std::size_t used = 2 * row_arity(row.command);
        for (std::size_t k = 0; k < used; ++k) {
            const auto probs = softmax_distributions(tape.value(heads.coords[k]).bottomRows(1)).front();
            row.coords[k] = sample_nucleus(probs, options.top_p, rng);
        }
        result.rows.push_back(row);
        if (row.command == TurtleToken::end) {
            return result;
        }
    }
    result.truncated = true;
    return result;
}

} // namespace sketchgen::model
