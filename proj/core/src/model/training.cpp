#include "sketchgen/model/training.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace sketchgen::model {

namespace {

struct Adam {
    std::vector<Matrix> m;
    std::vector<Matrix> v;
    int t = 0;

    explicit Adam(const ParameterSet& params) {
        for (const auto& p : params) {
            m.push_back(Matrix::Zero(p.value.rows(), p.value.cols()));
            v.push_back(Matrix::Zero(p.value.rows(), p.value.cols()));
        }
    }

    void step(ParameterSet& params, double lr, const TrainOptions& o) {
        ++t;
        const double c1 = 1.0 - std::pow(o.beta1, t);
        const double c2 = 1.0 - std::pow(o.beta2, t);
        for (std::size_t i = 0; i < params.size(); ++i) {
            auto& p = params[i];
            m[i] = o.beta1 * m[i] + (1.0 - o.beta1) * p.grad;
            v[i] = o.beta2 * v[i] + (1.0 - o.beta2) * p.grad.cwiseProduct(p.grad);
            p.value.array() -= lr * (m[i].array() / c1) / ((v[i].array() / c2).sqrt() + o.epsilon);
        }
    }
};

std::vector<Matrix> snapshot(const ParameterSet& params) {
    std::vector<Matrix> out;
    for (const auto& p : params) {
        out.push_back(p.value);
    }
    return out;
}

template <class Seq, class Fn>
double mean_nll(std::span<const Seq> items, Fn&& fn) {
    double total = 0.0;
    for (const auto& s : items) {
        total += fn(s);
    }
    return total / static_cast<double>(items.size());
}

} // namespace

TrainResult train_parameters(ParameterSet& params, std::size_t example_count, const ExampleLoss& loss,
                             const TrainOptions& options, const ValidationLoss& validation) {
    if (example_count == 0) {
        throw std::invalid_argument("training corpus is empty");
    }
    if (options.steps < 0 || options.batch_size == 0 || !(options.learning_rate > 0.0)) {
        throw std::invalid_argument("invalid training options");
    }
    util::Rng rng(options.seed);
    Adam adam(params);
    TrainResult result;
    double lr = options.learning_rate;
    const std::size_t batch = std::min(options.batch_size, example_count);
    std::vector<std::size_t> order(example_count);
    std::iota(order.begin(), order.end(), 0);
    std::size_t cursor = example_count;
    std::vector<Matrix> best;
    int stale = 0;

    for (int step = 1; step <= options.steps; ++step) {
        params.zero_grad();
        double batch_loss = 0.0;
        for (std::size_t b = 0; b < batch; ++b) {
            if (cursor == example_count) {
                rng.shuffle(order);
                cursor = 0;
            }
            Tape tape;
            const Var l = loss(tape, order[cursor++], rng);
            const double value = tape.scalar(l);
            if (!std::isfinite(value)) {
                throw TrainingDiverged("non-finite loss at step " + std::to_string(step));
            }
            batch_loss += value;
            tape.backward(tape.scale(l, 1.0 / static_cast<double>(batch)));
        }
        if (options.clip_norm > 0.0) {
            double sq = 0.0;
            for (const auto& p : params) {
                sq += p.grad.squaredNorm();
            }
            const double norm = std::sqrt(sq);
            if (norm > options.clip_norm) {
                for (auto& p : params) {
                    p.grad *= options.clip_norm / norm;
                }
            }
        }
        adam.step(params, lr, options);
        result.losses.push_back(batch_loss / static_cast<double>(batch));

        if (validation && options.validate_every > 0 &&
            (step % options.validate_every == 0 || step == options.steps)) {
            const double v = validation();
            if (!std::isfinite(v)) {
                throw TrainingDiverged("non-finite validation loss at step " + std::to_string(step));
            }
            result.validation.emplace_back(step, v);
            if (v < result.best_validation) {
                result.best_validation = v;
                result.best_step = step;
                best = snapshot(params);
                stale = 0;
            } else if (options.plateau_patience > 0 && ++stale >= options.plateau_patience) {
                lr *= options.decay_factor;
                stale = 0;
            }
        }
    }
    if (!best.empty()) {
        for (std::size_t i = 0; i < params.size(); ++i) {
            params[i].value = best[i];
        }
    }
    result.final_learning_rate = lr;
    return result;
}

TrainResult train(VertexModel& model, std::span<const std::vector<int>> corpus, const TrainOptions& options,
                  std::span<const std::vector<int>> validation) {
    const ExampleLoss loss = [&](Tape& tape, std::size_t i, util::Rng& rng) {
        return model.loss(tape, corpus[i], &rng);
    };
    ValidationLoss val;
    if (!validation.empty()) {
        val = [&] { return mean_nll(validation, [&](const std::vector<int>& s) { return model.nll(s); }); };
    }
    return train_parameters(model.parameters(), corpus.size(), loss, options, val);
}

TrainResult train(CurveModel& model, std::span<const CurveExample> corpus, const TrainOptions& options,
                  std::span<const CurveExample> validation) {
    const ExampleLoss loss = [&](Tape& tape, std::size_t i, util::Rng& rng) {
        return model.loss(tape, corpus[i].vertices, corpus[i].tokens, &rng);
    };
    ValidationLoss val;
    if (!validation.empty()) {
        val = [&] {
            return mean_nll(validation, [&](const CurveExample& e) { return model.nll(e.vertices, e.tokens); });
        };
    }
    return train_parameters(model.parameters(), corpus.size(), loss, options, val);
}

TrainResult train(TurtleModel& model, std::span<const std::vector<tokens::TurtleTokenRow>> corpus,
                  const TrainOptions& options, std::span<const std::vector<tokens::TurtleTokenRow>> validation) {
    const ExampleLoss loss = [&](Tape& tape, std::size_t i, util::Rng& rng) {
        return model.loss(tape, corpus[i], &rng);
    };
    ValidationLoss val;
    if (!validation.empty()) {
        val = [&] {
            return mean_nll(validation,
                            [&](const std::vector<tokens::TurtleTokenRow>& s) { return model.nll(s); });
        };
    }
    return train_parameters(model.parameters(), corpus.size(), loss, options, val);
}

} // namespace sketchgen::model
