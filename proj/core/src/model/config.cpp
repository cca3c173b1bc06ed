#include "sketchgen/model/config.hpp"

#include <string>

namespace sketchgen::model {

std::string_view to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::vertex:
        return "vertex";
    case ModelKind::curve:
        return "curve";
    case ModelKind::turtle:
        return "turtle";
    }
    return "unknown";
}

ModelKind model_kind_from_string(std::string_view text) {
    if (text == "vertex") {
        return ModelKind::vertex;
    }
    if (text == "curve") {
        return ModelKind::curve;
    }
    if (text == "turtle") {
        return ModelKind::turtle;
    }
    throw ConfigError("unknown model kind '" + std::string(text) + "'");
}

void validate_config(const ModelConfig& config) {
    if (config.blocks <= 0 || config.heads <= 0 || config.hidden_dim <= 0 || config.output_dim <= 0) {
        throw ConfigError("model sizes must be positive");
    }
    if (config.output_dim % config.heads != 0) {
        throw ConfigError("output_dim " + std::to_string(config.output_dim) + " is not divisible by heads " +
                          std::to_string(config.heads));
    }
    if (!(config.dropout >= 0.0 && config.dropout < 1.0)) {
        throw ConfigError("dropout must lie in [0, 1)");
    }
    if (config.kind != ModelKind::turtle && config.vocab_size < 2) {
        throw ConfigError("vocab_size must be at least 2");
    }
    if (config.max_len <= 0) {
        throw ConfigError("max_len must be positive");
    }
}

} // namespace sketchgen::model
