#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "sketchgen/model/autograd.hpp"
#include "sketchgen/model/curve_model.hpp"
#include "sketchgen/model/turtle_model.hpp"
#include "sketchgen/model/vertex_model.hpp"
#include "sketchgen/util/random.hpp"

namespace sketchgen::model {

struct TrainOptions {
    int steps = 200;
    double learning_rate = 5e-4;
    std::size_t batch_size = 8;
    std::uint64_t seed = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    // Evaluate the validation loss every this many steps (0 = never).
    int validate_every = 0;
    // Multiply the learning rate by decay_factor after this many validations
    // without improvement (0 = never).
    int plateau_patience = 0;
    double decay_factor = 0.5;
    // Rescale the global gradient to at most this norm (0 = off).
    double clip_norm = 0.0;
};

struct TrainResult {
    // Mean per-sequence nll of each step's batch, in nats.
    std::vector<double> losses;
    // (step, mean validation nll) at each evaluation.
    std::vector<std::pair<int, double>> validation;
    // Step whose parameters were kept; -1 when no validation ran.
    int best_step = -1;
    double best_validation = std::numeric_limits<double>::infinity();
    double final_learning_rate = 0.0;
};

class TrainingDiverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Loss of one example on a recording tape. `rng` drives dropout and any
// augmentation.
using ExampleLoss = std::function<Var(Tape& tape, std::size_t example, util::Rng& rng)>;
// Mean validation loss under the current parameters.
using ValidationLoss = std::function<double()>;

// Adam over `params` minimizing the mean loss of batches drawn without
// replacement from a per-epoch permutation of the examples. With a
// validation callback, the parameters with the lowest validation loss are
// restored at the end. Throws TrainingDiverged on a non-finite loss.
TrainResult train_parameters(ParameterSet& params, std::size_t example_count, const ExampleLoss& loss,
                             const TrainOptions& options, const ValidationLoss& validation = {});

TrainResult train(VertexModel& model, std::span<const std::vector<int>> corpus, const TrainOptions& options,
                  std::span<const std::vector<int>> validation = {});

struct CurveExample {
    std::vector<sketch::Vertex> vertices;
    std::vector<int> tokens;
};

TrainResult train(CurveModel& model, std::span<const CurveExample> corpus, const TrainOptions& options,
                  std::span<const CurveExample> validation = {});

TrainResult train(TurtleModel& model, std::span<const std::vector<tokens::TurtleTokenRow>> corpus,
                  const TrainOptions& options, std::span<const std::vector<tokens::TurtleTokenRow>> validation = {});

} // namespace sketchgen::model
