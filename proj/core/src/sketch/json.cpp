#include "sketchgen/sketch/json.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <string>

namespace sketchgen::sketch {

namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
}

const json& require_array(const json& doc, const char* key) {
    if (!doc.is_object()) {
        throw SchemaError("sketch must be a JSON object");
    }
    const auto it = doc.find(key);
    if (it == doc.end() || !it->is_array()) {
        throw SchemaError(std::string("sketch is missing array field \"") + key + "\"");
    }
    return *it;
}

std::vector<Hyperedge> parse_edges(const json& doc, std::size_t vertex_count) {
    std::vector<Hyperedge> edges;
    const auto& arr = require_array(doc, "edges");
    edges.reserve(arr.size());
    for (std::size_t e = 0; e < arr.size(); ++e) {
        const auto& item = arr[e];
        if (!item.is_array()) {
            throw SchemaError("edge " + std::to_string(e) + " is not an array");
        }
        Hyperedge edge;
        for (const auto& idx : item) {
            if (!idx.is_number_integer() || idx.get<long long>() < 0) {
                throw SchemaError("edge " + std::to_string(e) + " has a non-integer or negative index");
            }
            const auto id = idx.get<unsigned long long>();
            if (id >= vertex_count) {
                throw SchemaError("edge " + std::to_string(e) + " references vertex " + std::to_string(id) +
                                  " but only " + std::to_string(vertex_count) + " vertices exist");
            }
            edge.vertex_ids.push_back(static_cast<std::size_t>(id));
        }
        edges.push_back(std::move(edge));
    }
    return edges;
}

SketchHypergraph sketch_from_doc(const json& doc) {
    SketchHypergraph sketch;
    const auto& verts = require_array(doc, "vertices");
    sketch.vertices.reserve(verts.size());
    for (std::size_t v = 0; v < verts.size(); ++v) {
        const auto& item = verts[v];
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer()) {
            throw SchemaError("vertex " + std::to_string(v) + " must be [x, y] with integer coordinates");
        }
        const auto x = item[0].get<long long>();
        const auto y = item[1].get<long long>();
        if (x < 0 || x > kGridMax || y < 0 || y > kGridMax) {
            throw SchemaError("vertex " + std::to_string(v) + " lies outside the 256x256 grid");
        }
        sketch.vertices.push_back({static_cast<int>(x), static_cast<int>(y)});
    }
    sketch.edges = parse_edges(doc, sketch.vertices.size());
    return sketch;
}

RawSketch raw_from_doc(const json& doc) {
    RawSketch raw;
    const auto& verts = require_array(doc, "vertices");
    for (std::size_t v = 0; v < verts.size(); ++v) {
        const auto& item = verts[v];
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
            throw SchemaError("vertex " + std::to_string(v) + " must be [x, y] with numeric coordinates");
        }
        raw.vertices.push_back({item[0].get<double>(), item[1].get<double>()});
    }
    raw.edges = parse_edges(doc, raw.vertices.size());
    return raw;
}

template <class T, class FromDoc>
std::vector<T> read_many(std::string_view text, FromDoc from_doc) {
    std::vector<T> out;
    // A single (possibly multi-line) object parses whole; otherwise one per line.
    if (json::accept(text.begin(), text.end())) {
        const auto doc = parse_document(text);
        out.push_back(from_doc(doc));
        return out;
    }
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        const auto line = text.substr(pos, end - pos);
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
            try {
                out.push_back(from_doc(parse_document(line)));
            } catch (const SchemaError& e) {
                throw SchemaError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        pos = end + 1;
    }
    return out;
}

} // namespace

std::string to_json(const SketchHypergraph& sketch) {
    ordered_json doc;
    doc["vertices"] = ordered_json::array();
    for (const auto& v : sketch.vertices) {
        doc["vertices"].push_back({v.x, v.y});
    }
    doc["edges"] = ordered_json::array();
    for (const auto& e : sketch.edges) {
        auto ids = ordered_json::array();
        for (auto id : e.vertex_ids) {
            ids.push_back(id);
        }
        doc["edges"].push_back(std::move(ids));
    }
    return doc.dump();
}

SketchHypergraph sketch_from_json(std::string_view text) { return sketch_from_doc(parse_document(text)); }

RawSketch raw_sketch_from_json(std::string_view text) { return raw_from_doc(parse_document(text)); }

std::vector<SketchHypergraph> read_sketches(std::string_view text) {
    return read_many<SketchHypergraph>(text, sketch_from_doc);
}

std::vector<RawSketch> read_raw_sketches(std::string_view text) { return read_many<RawSketch>(text, raw_from_doc); }

std::string to_ndjson(const std::vector<SketchHypergraph>& sketches) {
    std::string out;
    for (const auto& s : sketches) {
        out += to_json(s);
        out += '\n';
    }
    return out;
}

} // namespace sketchgen::sketch
