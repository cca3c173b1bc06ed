#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sketchgen/model/autograd.hpp"
#include "sketchgen/util/random.hpp"

namespace sketchgen::model {

// Probabilities over the vocabulary at one sequence position.
using StepDistribution = std::vector<double>;

struct SampleOptions {
    double top_p = 0.9;
    std::uint64_t seed = 0;
    // Upper bound on the sampled sequence length; clamped to the model's max_len.
    std::size_t max_len = 256;
};

struct SampleResult {
    std::vector<int> tokens;
    // max_len was reached before the terminator.
    bool truncated = false;
};

// Row-wise softmax of a logit matrix, one distribution per row.
std::vector<StepDistribution> softmax_distributions(const Matrix& logits);

// Smallest prefix of the tokens sorted by descending probability (ties by
// ascending id) whose cumulative mass reaches top_p, renormalized. Returns
// (token, probability) pairs in that order. Throws std::invalid_argument
// for top_p outside (0, 1] or an empty distribution.
std::vector<std::pair<int, double>> nucleus(std::span<const double> probs, double top_p);

// One draw from nucleus(probs, top_p).
int sample_nucleus(std::span<const double> probs, double top_p, util::Rng& rng);

// Seed for the i-th item of a batch drawn under `seed` (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

} // namespace sketchgen::model
