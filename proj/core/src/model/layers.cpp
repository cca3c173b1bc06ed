#include "sketchgen/model/layers.hpp"

#include <cmath>
#include <stdexcept>

namespace sketchgen::model {

Matrix random_normal(Eigen::Index rows, Eigen::Index cols, double stddev, util::Rng& rng) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        m.data()[i] = stddev * rng.normal();
    }
    return m;
}

Var apply_dropout(const Context& ctx, Var x) {
    if (!ctx.training()) {
        return x;
    }
    const Matrix& v = ctx.tape.value(x);
    const double keep = 1.0 - ctx.dropout;
    Matrix mask(v.rows(), v.cols());
    for (Eigen::Index i = 0; i < mask.size(); ++i) {
        mask.data()[i] = ctx.rng->uniform01() < keep ? 1.0 / keep : 0.0;
    }
    return ctx.tape.mul_const(x, mask);
}

Linear Linear::create(ParameterSet& params, const std::string& name, int in, int out, util::Rng& rng) {
    Linear l;
    l.weight = params.add(name + ".weight", random_normal(in, out, 1.0 / std::sqrt(static_cast<double>(in)), rng));
    l.bias = params.add(name + ".bias", Matrix::Zero(1, out));
    return l;
}

Var Linear::operator()(const Context& ctx, Var x) const {
    return ctx.tape.add_row(ctx.tape.matmul(x, ctx.get(weight)), ctx.get(bias));
}

LayerNorm LayerNorm::create(ParameterSet& params, const std::string& name, int width) {
    LayerNorm n;
    n.gamma = params.add(name + ".gamma", Matrix::Ones(1, width));
    n.beta = params.add(name + ".beta", Matrix::Zero(1, width));
    return n;
}

Var LayerNorm::operator()(const Context& ctx, Var x) const {
    return ctx.tape.layer_norm(x, ctx.get(gamma), ctx.get(beta));
}

Attention Attention::create(ParameterSet& params, const std::string& name, int width, int heads,
                            util::Rng& rng) {
    if (heads <= 0 || width % heads != 0) {
        throw std::invalid_argument("attention width must be divisible by heads");
    }
    Attention a;
    a.query = Linear::create(params, name + ".query", width, width, rng);
    a.key = Linear::create(params, name + ".key", width, width, rng);
    a.value = Linear::create(params, name + ".value", width, width, rng);
    a.out = Linear::create(params, name + ".out", width, width, rng);
    a.heads = heads;
    return a;
}

Var Attention::operator()(const Context& ctx, Var x, Var source, bool causal) const {
    auto& t = ctx.tape;
    if (causal && t.value(x).rows() != t.value(source).rows()) {
        throw std::invalid_argument("causal attention needs equal query and key lengths");
    }
    const Var q = query(ctx, x);
    const Var k = key(ctx, source);
    const Var v = value(ctx, source);
    const auto width = t.value(q).cols();
    const auto head_dim = width / heads;
    const double scale = 1.0 / std::sqrt(static_cast<double>(head_dim));
    std::vector<Var> outputs;
    outputs.reserve(static_cast<std::size_t>(heads));
    for (int h = 0; h < heads; ++h) {
        const auto start = h * head_dim;
        const Var qh = t.slice_cols(q, start, head_dim);
        const Var kh = t.slice_cols(k, start, head_dim);
        const Var vh = t.slice_cols(v, start, head_dim);
        const Var weights = t.softmax_rows(t.scale(t.matmul_bt(qh, kh), scale), causal);
        outputs.push_back(t.matmul(weights, vh));
    }
    const Var merged = heads == 1 ? outputs.front() : t.concat_cols(outputs);
    return out(ctx, merged);
}

Block Block::create(ParameterSet& params, const std::string& name, int width, int hidden, int heads, bool cross,
                    util::Rng& rng) {
    Block b;
    b.norm_self = LayerNorm::create(params, name + ".norm_self", width);
    b.self_attention = Attention::create(params, name + ".self", width, heads, rng);
    b.has_cross = cross;
    if (cross) {
        b.norm_cross = LayerNorm::create(params, name + ".norm_cross", width);
        b.cross_attention = Attention::create(params, name + ".cross", width, heads, rng);
    }
    b.norm_mlp = LayerNorm::create(params, name + ".norm_mlp", width);
    b.mlp_in = Linear::create(params, name + ".mlp_in", width, hidden, rng);
    b.mlp_out = Linear::create(params, name + ".mlp_out", hidden, width, rng);
    return b;
}

Var Block::operator()(const Context& ctx, Var x, bool causal, const Var* memory) const {
    auto& t = ctx.tape;
    const Var normed = norm_self(ctx, x);
    x = t.add(x, apply_dropout(ctx, self_attention(ctx, normed, normed, causal)));
    if (has_cross) {
        if (memory == nullptr) {
            throw std::invalid_argument("cross-attention block needs an encoder memory");
        }
        x = t.add(x, apply_dropout(ctx, cross_attention(ctx, norm_cross(ctx, x), *memory, false)));
    }
    const Var h = t.gelu(mlp_in(ctx, norm_mlp(ctx, x)));
    return t.add(x, apply_dropout(ctx, mlp_out(ctx, h)));
}

Stack Stack::create(ParameterSet& params, const std::string& name, int count, int width, int hidden, int heads,
                    bool cross, util::Rng& rng) {
    Stack s;
    for (int i = 0; i < count; ++i) {
        s.blocks.push_back(
            Block::create(params, name + ".block" + std::to_string(i), width, hidden, heads, cross, rng));
    }
    s.final_norm = LayerNorm::create(params, name + ".final_norm", width);
    return s;
}

Var Stack::operator()(const Context& ctx, Var x, bool causal, const Var* memory) const {
    for (const auto& b : blocks) {
        x = b(ctx, x, causal, memory);
    }
    return final_norm(ctx, x);
}

} // namespace sketchgen::model
