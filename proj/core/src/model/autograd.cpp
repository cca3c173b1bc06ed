#include "sketchgen/model/autograd.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sketchgen::model {

namespace {

constexpr double kGeluK = 0.7978845608028654; // sqrt(2 / pi)
constexpr double kGeluC = 0.044715;

void require(bool ok, const char* what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

} // namespace

std::size_t ParameterSet::add(std::string name, Matrix init) {
    params_.push_back({std::move(name), std::move(init), Matrix()});
    return params_.size() - 1;
}

std::size_t ParameterSet::find(std::string_view name) const {
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (params_[i].name == name) {
            return i;
        }
    }
    return params_.size();
}

void ParameterSet::zero_grad() {
    for (auto& p : params_) {
        p.grad = Matrix::Zero(p.value.rows(), p.value.cols());
    }
}

std::size_t ParameterSet::scalar_count() const {
    std::size_t n = 0;
    for (const auto& p : params_) {
        n += static_cast<std::size_t>(p.value.size());
    }
    return n;
}

Matrix log_softmax_rows(const Matrix& logits) {
    Matrix out(logits.rows(), logits.cols());
    for (Eigen::Index r = 0; r < logits.rows(); ++r) {
        const double m = logits.row(r).maxCoeff();
        const double lse = m + std::log((logits.row(r).array() - m).exp().sum());
        out.row(r) = logits.row(r).array() - lse;
    }
    return out;
}

Var Tape::push(Matrix value, std::function<void(Tape&, std::size_t)> backprop) {
    Node node;
    node.value = std::move(value);
    if (record_) {
        node.backprop = std::move(backprop);
    }
    nodes_.push_back(std::move(node));
    return Var(static_cast<int>(nodes_.size() - 1));
}

Matrix& Tape::grad(int id) {
    auto& node = nodes_[static_cast<std::size_t>(id)];
    if (node.grad.size() == 0) {
        node.grad = Matrix::Zero(node.value.rows(), node.value.cols());
    }
    return node.grad;
}

Var Tape::constant(Matrix value) { return push(std::move(value)); }

Var Tape::param(ParameterSet& params, std::size_t index) {
    auto& p = params[index];
    Var v = push(p.value);
    if (record_) {
        nodes_.back().param = &p;
    }
    return v;
}

Var Tape::param(const ParameterSet& params, std::size_t index) { return push(params[index].value); }

void Tape::backward(Var loss) {
    require(record_, "backward on a non-recording tape");
    require(value(loss).size() == 1, "backward needs a scalar loss");
    grad(loss)(0, 0) += 1.0;
    for (std::size_t i = nodes_.size(); i-- > 0;) {
        if (nodes_[i].grad.size() == 0) {
            continue;
        }
        if (nodes_[i].backprop) {
            nodes_[i].backprop(*this, i);
        }
        if (nodes_[i].param != nullptr) {
            auto& p = *nodes_[i].param;
            if (p.grad.size() == 0) {
                p.grad = Matrix::Zero(p.value.rows(), p.value.cols());
            }
            p.grad += nodes_[i].grad;
        }
    }
}

Var Tape::matmul(Var a, Var b) {
    require(value(a).cols() == value(b).rows(), "matmul shape mismatch");
    Matrix out = value(a) * value(b);
    const int ia = a.id(), ib = b.id();
    return push(std::move(out), [ia, ib](Tape& t, std::size_t self) {
        const Matrix& g = t.self_grad(self);
        t.grad(ia).noalias() += g * t.nodes_[static_cast<std::size_t>(ib)].value.transpose();
        t.grad(ib).noalias() += t.nodes_[static_cast<std::size_t>(ia)].value.transpose() * g;
    });
}

Var Tape::matmul_bt(Var a, Var b) {
    require(value(a).cols() == value(b).cols(), "matmul_bt shape mismatch");
    Matrix out = value(a) * value(b).transpose();
    const int ia = a.id(), ib = b.id();
    return push(std::move(out), [ia, ib](Tape& t, std::size_t self) {
        const Matrix& g = t.self_grad(self);
        t.grad(ia).noalias() += g * t.nodes_[static_cast<std::size_t>(ib)].value;
        t.grad(ib).noalias() += g.transpose() * t.nodes_[static_cast<std::size_t>(ia)].value;
    });
}

Var Tape::add(Var a, Var b) {
    require(value(a).rows() == value(b).rows() && value(a).cols() == value(b).cols(), "add shape mismatch");
    Matrix out = value(a) + value(b);
    const int ia = a.id(), ib = b.id();
    return push(std::move(out), [ia, ib](Tape& t, std::size_t self) {
        const Matrix& g = t.self_grad(self);
        t.grad(ia) += g;
        t.grad(ib) += g;
    });
}

Var Tape::add_row(Var a, Var row) {
    require(value(row).rows() == 1 && value(row).cols() == value(a).cols(), "add_row shape mismatch");
    Matrix out = value(a).rowwise() + value(row).row(0);
    const int ia = a.id(), ir = row.id();
    return push(std::move(out), [ia, ir](Tape& t, std::size_t self) {
        const Matrix& g = t.self_grad(self);
        t.grad(ia) += g;
        t.grad(ir) += g.colwise().sum();
    });
}

Var Tape::scale(Var a, double s) {
    Matrix out = value(a) * s;
    const int ia = a.id();
    return push(std::move(out), [ia, s](Tape& t, std::size_t self) { t.grad(ia) += s * t.self_grad(self); });
}

Var Tape::mul_const(Var a, const Matrix& m) {
    require(value(a).rows() == m.rows() && value(a).cols() == m.cols(), "mul_const shape mismatch");
    Matrix out = value(a).cwiseProduct(m);
    const int ia = a.id();
    return push(std::move(out),
                [ia, m](Tape& t, std::size_t self) { t.grad(ia) += t.self_grad(self).cwiseProduct(m); });
}

Var Tape::gelu(Var a) {
    const Matrix& x = value(a);
    Matrix out(x.rows(), x.cols());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double v = x.data()[i];
        out.data()[i] = 0.5 * v * (1.0 + std::tanh(kGeluK * (v + kGeluC * v * v * v)));
    }
    const int ia = a.id();
    return push(std::move(out), [ia](Tape& t, std::size_t self) {
        const Matrix& x = t.nodes_[static_cast<std::size_t>(ia)].value;
        const Matrix& g = t.self_grad(self);
        Matrix& ga = t.grad(ia);
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            const double v = x.data()[i];
            const double th = std::tanh(kGeluK * (v + kGeluC * v * v * v));
            const double d = 0.5 * (1.0 + th) + 0.5 * v * (1.0 - th * th) * kGeluK * (1.0 + 3.0 * kGeluC * v * v);
            ga.data()[i] += g.data()[i] * d;
        }
    });
}

Var Tape::layer_norm(Var x, Var gamma, Var beta, double eps) {
    const Matrix& xv = value(x);
    require(value(gamma).rows() == 1 && value(gamma).cols() == xv.cols(), "layer_norm gamma shape");
    require(value(beta).rows() == 1 && value(beta).cols() == xv.cols(), "layer_norm beta shape");
    const auto n = static_cast<double>(xv.cols());
    Matrix xhat(xv.rows(), xv.cols());
    Eigen::VectorXd inv_std(xv.rows());
    for (Eigen::Index r = 0; r < xv.rows(); ++r) {
        const double mean = xv.row(r).sum() / n;
        const double var = (xv.row(r).array() - mean).square().sum() / n;
        inv_std(r) = 1.0 / std::sqrt(var + eps);
        xhat.row(r) = (xv.row(r).array() - mean) * inv_std(r);
    }
    Matrix out = (xhat.array().rowwise() * value(gamma).row(0).array()).rowwise() + value(beta).row(0).array();
    const int ix = x.id(), ig = gamma.id(), ib = beta.id();
    return push(std::move(out), [ix, ig, ib, xhat, inv_std, n](Tape& t, std::size_t self) {
        const Matrix& g = t.self_grad(self);
        const Matrix& gam = t.nodes_[static_cast<std::size_t>(ig)].value;
        t.grad(ig) += g.cwiseProduct(xhat).colwise().sum();
        t.grad(ib) += g.colwise().sum();
        Matrix& gx = t.grad(ix);
        for (Eigen::Index r = 0; r < g.rows(); ++r) {
            const Eigen::RowVectorXd dxhat = g.row(r).cwiseProduct(gam.row(0));
            const double mean_d = dxhat.sum() / n;
            const double mean_dx = dxhat.dot(xhat.row(r)) / n;
            gx.row(r).array() += inv_std(r) * (dxhat.array() - mean_d - xhat.row(r).array() * mean_dx);
        }
    });
}

Var Tape::softmax_rows(Var a, bool causal) {
    const Matrix& x = value(a);
    Matrix p = Matrix::Zero(x.rows(), x.cols());
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
        const Eigen::Index width = causal ? std::min<Eigen::Index>(r + 1, x.cols()) : x.cols();
        const double m = x.row(r).head(width).maxCoeff();
        p.row(r).head(width) = (x.row(r).head(width).array() - m).exp();
        p.row(r).head(width) /= p.row(r).head(width).sum();
    }
    const int ia = a.id();
    Matrix probs = p;
    return push(std::move(p), [ia, probs](Tape& t, std::size_t self) {
        const Matrix& g = t.self_grad(self);
        Matrix& ga = t.grad(ia);
        for (Eigen::Index r = 0; r < g.rows(); ++r) {
            const double dot = g.row(r).dot(probs.row(r));
            ga.row(r).array() += probs.row(r).array() * (g.row(r).array() - dot);
        }
    });
}

Var Tape::gather_rows(Var table, std::span<const int> rows) {
    const Matrix& tv = value(table);
    Matrix out(static_cast<Eigen::Index>(rows.size()), tv.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i] >= 0 && rows[i] < tv.rows(), "gather_rows index out of range");
        out.row(static_cast<Eigen::Index>(i)) = tv.row(rows[i]);
    }
    const int it = table.id();
    std::vector<int> idx(rows.begin(), rows.end());
    return push(std::move(out), [it, idx](Tape& t, std::size_t self) {
        const Matrix& g = t.self_grad(self);
        Matrix& gt = t.grad(it);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            gt.row(idx[i]) += g.row(static_cast<Eigen::Index>(i));
        }
    });
}

Var Tape::slice_cols(Var a, Eigen::Index start, Eigen::Index count) {
    require(start >= 0 && start + count <= value(a).cols(), "slice_cols out of range");
    Matrix out = value(a).middleCols(start, count);
    const int ia = a.id();
    return push(std::move(out), [ia, start, count](Tape& t, std::size_t self) {
        t.grad(ia).middleCols(start, count) += t.self_grad(self);
    });
}

Var Tape::concat_cols(std::span<const Var> parts) {
    require(!parts.empty(), "concat_cols needs parts");
    const Eigen::Index rows = value(parts[0]).rows();
    Eigen::Index cols = 0;
    for (auto p : parts) {
        require(value(p).rows() == rows, "concat_cols row mismatch");
        cols += value(p).cols();
    }
    Matrix out(rows, cols);
    std::vector<int> ids;
    Eigen::Index at = 0;
    for (auto p : parts) {
        out.middleCols(at, value(p).cols()) = value(p);
        at += value(p).cols();
        ids.push_back(p.id());
    }
    return push(std::move(out), [ids](Tape& t, std::size_t self) {
        const Matrix& g = t.self_grad(self);
        Eigen::Index at = 0;
        for (int id : ids) {
            const auto w = t.nodes_[static_cast<std::size_t>(id)].value.cols();
            t.grad(id) += g.middleCols(at, w);
            at += w;
        }
    });
}

Var Tape::concat_rows(Var a, Var b) {
    require(value(a).cols() == value(b).cols(), "concat_rows column mismatch");
    const Eigen::Index ra = value(a).rows();
    Matrix out(ra + value(b).rows(), value(a).cols());
    out.topRows(ra) = value(a);
    out.bottomRows(value(b).rows()) = value(b);
    const int ia = a.id(), ib = b.id();
    return push(std::move(out), [ia, ib, ra](Tape& t, std::size_t self) {
        const Matrix& g = t.self_grad(self);
        t.grad(ia) += g.topRows(ra);
        t.grad(ib) += g.bottomRows(g.rows() - ra);
    });
}

Var Tape::cross_entropy(Var logits, std::span<const int> targets) {
    const Matrix& x = value(logits);
    require(static_cast<Eigen::Index>(targets.size()) == x.rows(), "cross_entropy target count mismatch");
    const Matrix logp = log_softmax_rows(x);
    double loss = 0.0;
    for (std::size_t r = 0; r < targets.size(); ++r) {
        require(targets[r] >= 0 && targets[r] < x.cols(), "cross_entropy target out of vocabulary");
        loss -= logp(static_cast<Eigen::Index>(r), targets[r]);
    }
    Matrix out(1, 1);
    out(0, 0) = loss;
    const int il = logits.id();
    std::vector<int> tgt(targets.begin(), targets.end());
    return push(std::move(out), [il, tgt, logp](Tape& t, std::size_t self) {
        const double g = t.self_grad(self)(0, 0);
        Matrix d = logp.array().exp();
        for (std::size_t r = 0; r < tgt.size(); ++r) {
            d(static_cast<Eigen::Index>(r), tgt[r]) -= 1.0;
        }
        t.grad(il) += g * d;
    });
}

} // namespace sketchgen::model
