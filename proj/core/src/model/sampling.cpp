#include "sketchgen/model/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sketchgen::model {

std::vector<StepDistribution> softmax_distributions(const Matrix& logits) {
    const Matrix logp = log_softmax_rows(logits);
    std::vector<StepDistribution> out(static_cast<std::size_t>(logp.rows()));
    for (Eigen::Index r = 0; r < logp.rows(); ++r) {
        auto& d = out[static_cast<std::size_t>(r)];
        d.resize(static_cast<std::size_t>(logp.cols()));
        for (Eigen::Index c = 0; c < logp.cols(); ++c) {
            d[static_cast<std::size_t>(c)] = std::exp(logp(r, c));
        }
    }
    return out;
}

std::vector<std::pair<int, double>> nucleus(std::span<const double> probs, double top_p) {
    if (!(top_p > 0.0 && top_p <= 1.0)) {
        throw std::invalid_argument("top_p must lie in (0, 1]");
    }
    if (probs.empty()) {
        throw std::invalid_argument("empty distribution");
    }
    std::vector<int> order(probs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return probs[a] > probs[b]; });
    std::vector<std::pair<int, double>> kept;
    double mass = 0.0;
    for (int id : order) {
        kept.emplace_back(id, probs[id]);
        mass += probs[id];
        if (mass >= top_p - 1e-12) {
            break;
        }
    }
    if (mass <= 0.0) {
        throw std::invalid_argument("distribution has no mass");
    }
    for (auto& [id, p] : kept) {
        p /= mass;
    }
    return kept;
}

int sample_nucleus(std::span<const double> probs, double top_p, util::Rng& rng) {
    const auto kept = nucleus(probs, top_p);
    if (kept.size() == 1) {
        return kept.front().first;
    }
    const double u = rng.uniform01();
    double acc = 0.0;
    for (const auto& [id, p] : kept) {
        acc += p;
        if (u < acc) {
            return id;
        }
    }
    return kept.back().first;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace sketchgen::model
