#pragma once

#include <cstdint>
#include <string_view>

#include "sketchgen/util/error.hpp"

namespace sketchgen::model {

enum class ModelKind { vertex, curve, turtle };

std::string_view to_string(ModelKind kind);
ModelKind model_kind_from_string(std::string_view text);

// Transformer shape. output_dim is the residual width shared by attention
// and embeddings and must be divisible by heads; hidden_dim is the inner
// width of each block's MLP.
struct ModelConfig {
    ModelKind kind = ModelKind::vertex;
    int blocks = 2;
    int heads = 4;
    int hidden_dim = 128;
    int output_dim = 64;
    double dropout = 0.0;
    // Vertex kind: token vocabulary, the last id terminates a sequence.
    // Curve kind: coordinate values per axis. Turtle kind: ignored.
    int vocab_size = 257;
    int max_len = 256;
    std::uint64_t seed = 0;
};

class ConfigError : public InputError {
public:
    using InputError::InputError;
};

// Throws ConfigError on non-positive sizes, a width not divisible by heads
// or dropout outside [0, 1).
void validate_config(const ModelConfig& config);

} // namespace sketchgen::model
