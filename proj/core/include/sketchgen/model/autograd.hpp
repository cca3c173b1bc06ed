#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <deque>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sketchgen::model {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Parameter {
    std::string name;
    Matrix value;
    Matrix grad;
};

// Named trainable tensors. Parameters are addressed by index so that models
// holding indices stay copyable.
class ParameterSet {
public:
    std::size_t add(std::string name, Matrix init);

    Parameter& operator[](std::size_t i) { return params_[i]; }
    const Parameter& operator[](std::size_t i) const { return params_[i]; }
    std::size_t size() const { return params_.size(); }

    // Index of the named parameter, or size() if absent.
    std::size_t find(std::string_view name) const;

    void zero_grad();
    std::size_t scalar_count() const;

    auto begin() { return params_.begin(); }
    auto end() { return params_.end(); }
    auto begin() const { return params_.begin(); }
    auto end() const { return params_.end(); }

private:
    std::deque<Parameter> params_;
};

// Handle to a node on a Tape.
class Var {
public:
    Var() = default;
    int id() const { return id_; }

private:
    friend class Tape;
    explicit Var(int id) : id_(id) {}
    int id_ = -1;
};

// Reverse-mode automatic differentiation over dense row-major matrices.
// Every op records its value immediately; backward() replays the recorded
// adjoints in reverse and accumulates into the bound parameters' grads.
// With recording off, ops only compute values.
class Tape {
public:
    explicit Tape(bool record = true) : record_(record) {}

    Var constant(Matrix value);
    Var param(ParameterSet& params, std::size_t index);
    // Read-only parameter use (no gradient), for evaluation.
    Var param(const ParameterSet& params, std::size_t index);

    const Matrix& value(Var v) const { return nodes_[static_cast<std::size_t>(v.id())].value; }
    double scalar(Var v) const { return value(v)(0, 0); }

    // Seeds d(loss)/d(loss) = 1 for a 1x1 loss and accumulates parameter grads.
    void backward(Var loss);

    Var matmul(Var a, Var b);    // a * b
    Var matmul_bt(Var a, Var b); // a * b^T
    Var add(Var a, Var b);
    Var add_row(Var a, Var row); // broadcast a 1xN row over every row of a
    Var scale(Var a, double s);
    Var mul_const(Var a, const Matrix& m); // elementwise, m carries no gradient
    Var gelu(Var a);                       // tanh approximation
    Var layer_norm(Var x, Var gamma, Var beta, double eps = 1e-5);
    // Row-wise softmax; with `causal`, entry (i, j) is masked for j > i.
    Var softmax_rows(Var a, bool causal);
    Var gather_rows(Var table, std::span<const int> rows);
    Var slice_cols(Var a, Eigen::Index start, Eigen::Index count);
    Var concat_cols(std::span<const Var> parts);
    Var concat_rows(Var a, Var b);
    // Sum over rows t of -log softmax(logits_t)[targets[t]], as a 1x1 value.
    Var cross_entropy(Var logits, std::span<const int> targets);

    std::size_t node_count() const { return nodes_.size(); }

private:
    struct Node {
        Matrix value;
        Matrix grad;
        std::function<void(Tape&, std::size_t)> backprop;
        Parameter* param = nullptr;
    };

    Var push(Matrix value, std::function<void(Tape&, std::size_t)> backprop = {});
    Matrix& grad(int id);
    Matrix& grad(Var v) { return grad(v.id()); }
    const Matrix& self_grad(std::size_t i) const { return nodes_[i].grad; }

    bool record_;
    std::vector<Node> nodes_;
};

// Row-wise log-softmax with max subtraction.
Matrix log_softmax_rows(const Matrix& logits);

} // namespace sketchgen::model
