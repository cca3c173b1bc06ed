#include "sketchgen/model/checkpoint.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sketchgen::model {

using nlohmann::json;

namespace {

json config_to_json(const ModelConfig& c) {
    return {{"kind", std::string(to_string(c.kind))},
            {"blocks", c.blocks},
            {"heads", c.heads},
            {"hidden_dim", c.hidden_dim},
            {"output_dim", c.output_dim},
            {"dropout", c.dropout},
            {"vocab_size", c.vocab_size},
            {"max_len", c.max_len},
            {"seed", c.seed}};
}

ModelConfig config_from_json(const json& j) {
    ModelConfig c;
    c.kind = model_kind_from_string(j.at("kind").get<std::string>());
    c.blocks = j.at("blocks").get<int>();
    c.heads = j.at("heads").get<int>();
    c.hidden_dim = j.at("hidden_dim").get<int>();
    c.output_dim = j.at("output_dim").get<int>();
    c.dropout = j.at("dropout").get<double>();
    c.vocab_size = j.at("vocab_size").get<int>();
    c.max_len = j.at("max_len").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

json params_to_json(const ParameterSet& params) {
    json out = json::array();
    for (const auto& p : params) {
        std::vector<double> data(p.value.data(), p.value.data() + p.value.size());
        out.push_back({{"name", p.name}, {"rows", p.value.rows()}, {"cols", p.value.cols()}, {"data", data}});
    }
    return out;
}

void params_from_json(ParameterSet& params, const json& j) {
    for (auto& p : params) {
        const json* found = nullptr;
        for (const auto& entry : j) {
            if (entry.at("name").get<std::string>() == p.name) {
                found = &entry;
                break;
            }
        }
        if (found == nullptr) {
            throw CheckpointError("checkpoint is missing parameter '" + p.name + "'");
        }
        const auto rows = found->at("rows").get<Eigen::Index>();
        const auto cols = found->at("cols").get<Eigen::Index>();
        const auto data = found->at("data").get<std::vector<double>>();
        if (rows != p.value.rows() || cols != p.value.cols() || static_cast<Eigen::Index>(data.size()) != rows * cols) {
            throw CheckpointError("parameter '" + p.name + "' has the wrong shape");
        }
        std::copy(data.begin(), data.end(), p.value.data());
    }
}

template <class Model>
json model_to_json(const Model& m) {
    return {{"config", config_to_json(m.config())}, {"parameters", params_to_json(m.parameters())}};
}

template <class Model>
Model model_from_json(const json& j) {
    Model m(config_from_json(j.at("config")));
    params_from_json(m.parameters(), j.at("parameters"));
    return m;
}

} // namespace

std::string serialize_checkpoint(const Generator& generator) {
    json doc = {{"format", std::string(kCheckpointFormat)}, {"version", kCheckpointVersion}};
    if (const auto* cg = std::get_if<CurveGen>(&generator)) {
        doc["generator"] = "curvegen";
        doc["models"] = {{"vertex", model_to_json(cg->vertex)}, {"curve", model_to_json(cg->curve)}};
    } else {
        const auto& tg = std::get<TurtleGen>(generator);
        doc["generator"] = "turtlegen";
        doc["models"] = {{"turtle", model_to_json(tg.model)}};
        json prefixes = json::array();
        for (const auto& prefix : tg.prefixes) {
            json rows = json::array();
            for (const auto& r : prefix) {
                rows.push_back(r.to_array());
            }
            prefixes.push_back(std::move(rows));
        }
        doc["prefixes"] = std::move(prefixes);
    }
    return doc.dump();
}

Generator parse_checkpoint(std::string_view text) {
    try {
        const json doc = json::parse(text);
        if (doc.at("format").get<std::string>() != kCheckpointFormat) {
            throw CheckpointError("not a sketchgen checkpoint");
        }
        if (doc.at("version").get<int>() != kCheckpointVersion) {
            throw CheckpointError("unsupported checkpoint version " + doc.at("version").dump());
        }
        const auto kind = doc.at("generator").get<std::string>();
        const auto& models = doc.at("models");
        if (kind == "curvegen") {
            return CurveGen{model_from_json<VertexModel>(models.at("vertex")),
                            model_from_json<CurveModel>(models.at("curve"))};
        }
        if (kind == "turtlegen") {
            TurtleGen tg{model_from_json<TurtleModel>(models.at("turtle")), {}};
            for (const auto& prefix : doc.at("prefixes")) {
                std::vector<tokens::TurtleTokenRow> rows;
                for (const auto& r : prefix) {
                    const auto values = r.get<std::vector<int>>();
                    rows.push_back(tokens::row_from_array(values));
                }
                tg.prefixes.push_back(std::move(rows));
            }
            return tg;
        }
        throw CheckpointError("unknown generator '" + kind + "'");
    } catch (const json::exception& e) {
        throw CheckpointError(std::string("malformed checkpoint: ") + e.what());
    }
}

void save_checkpoint(const std::filesystem::path& path, const Generator& generator) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw CheckpointError("cannot write " + path.string());
    }
    out << serialize_checkpoint(generator) << '\n';
}

Generator load_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CheckpointError("cannot read " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_checkpoint(text.str());
}

} // namespace sketchgen::model
