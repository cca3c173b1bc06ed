#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sketchgen/model/autograd.hpp"
#include "sketchgen/util/random.hpp"

namespace sketchgen::model {

// Binds parameters onto a tape for one forward pass. With `trainable` set,
// parameter nodes receive gradients; `rng` enables dropout.
struct Context {
    Tape& tape;
    const ParameterSet& params;
    ParameterSet* trainable = nullptr;
    util::Rng* rng = nullptr;
    double dropout = 0.0;

    Var get(std::size_t index) const {
        return trainable != nullptr ? tape.param(*trainable, index) : tape.param(params, index);
    }
    bool training() const { return rng != nullptr && dropout > 0.0; }
};

Matrix random_normal(Eigen::Index rows, Eigen::Index cols, double stddev, util::Rng& rng);

Var apply_dropout(const Context& ctx, Var x);

struct Linear {
    std::size_t weight = 0;
    std::size_t bias = 0;

    static Linear create(ParameterSet& params, const std::string& name, int in, int out, util::Rng& rng);
    Var operator()(const Context& ctx, Var x) const;
};

struct LayerNorm {
    std::size_t gamma = 0;
    std::size_t beta = 0;

    static LayerNorm create(ParameterSet& params, const std::string& name, int width);
    Var operator()(const Context& ctx, Var x) const;
};

struct Attention {
    Linear query, key, value, out;
    int heads = 1;

    static Attention create(ParameterSet& params, const std::string& name, int width, int heads, util::Rng& rng);
    // Queries from x, keys/values from source. Causal masking needs equal lengths.
    Var operator()(const Context& ctx, Var x, Var source, bool causal) const;
};

// Pre-norm residual block: self-attention, optional cross-attention over an
// encoder memory, then a GELU MLP.
struct Block {
    LayerNorm norm_self;
    Attention self_attention;
    bool has_cross = false;
    LayerNorm norm_cross;
    Attention cross_attention;
    LayerNorm norm_mlp;
    Linear mlp_in, mlp_out;

    static Block create(ParameterSet& params, const std::string& name, int width, int hidden, int heads,
                        bool cross, util::Rng& rng);
    Var operator()(const Context& ctx, Var x, bool causal, const Var* memory) const;
};

struct Stack {
    std::vector<Block> blocks;
    LayerNorm final_norm;

    static Stack create(ParameterSet& params, const std::string& name, int count, int width, int hidden,
                        int heads, bool cross, util::Rng& rng);
    Var operator()(const Context& ctx, Var x, bool causal, const Var* memory = nullptr) const;
};

} // namespace sketchgen::model
