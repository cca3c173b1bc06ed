#include "sketchgen/sketch/loops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

#include "sketchgen/sketch/equivalence.hpp"

namespace sketchgen::sketch {

namespace {

// Graph view: lines and arcs connect their first and last vertex. Nodes are
// distinct coordinates, so duplicated vertex slots still close a loop.
struct Graph {
    std::vector<std::size_t> node_of_vertex;
    std::vector<std::size_t> edge_a;
    std::vector<std::size_t> edge_b;
    std::vector<std::vector<std::size_t>> incident; // node -> edges, in key order
};

bool is_open_curve(const Hyperedge& e, std::size_t vertex_count) {
    const auto& ids = e.vertex_ids;
    if (ids.size() != 2 && ids.size() != 3) {
        return false;
    }
    return std::all_of(ids.begin(), ids.end(), [&](std::size_t id) { return id < vertex_count; });
}

} // namespace

std::size_t curve_start(const SketchHypergraph& sketch, const LoopCurve& curve) {
    const auto& ids = sketch.edges[curve.edge].vertex_ids;
    return curve.reversed ? ids.back() : ids.front();
}

std::size_t curve_end(const SketchHypergraph& sketch, const LoopCurve& curve) {
    const auto& ids = sketch.edges[curve.edge].vertex_ids;
    if (ids.size() == 4) {
        return curve.reversed ? ids.back() : ids.front();
    }
    return curve.reversed ? ids.front() : ids.back();
}

std::vector<std::size_t> curve_points(const SketchHypergraph& sketch, const LoopCurve& curve) {
    std::vector<std::size_t> ids = sketch.edges[curve.edge].vertex_ids;
    if (curve.reversed) {
        std::reverse(ids.begin(), ids.end());
    }
    return ids;
}

LoopDecomposition find_loops(const SketchHypergraph& sketch) {
    const std::size_t edge_count = sketch.edges.size();
    const std::size_t vertex_count = sketch.vertices.size();

    std::vector<std::vector<Vertex>> keys(edge_count);
    for (std::size_t e = 0; e < edge_count; ++e) {
        keys[e] = canonical_edge(sketch, e);
    }
    std::vector<std::size_t> order(edge_count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<std::size_t> rank(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i) {
        rank[order[i]] = i;
    }

    Graph g;
    std::map<Vertex, std::size_t> node_ids;
    for (const auto& v : sketch.vertices) {
        node_ids.try_emplace(v, 0);
    }
    std::size_t next = 0;
    for (auto& [v, id] : node_ids) {
        id = next++;
    }
    g.node_of_vertex.resize(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        g.node_of_vertex[v] = node_ids.at(sketch.vertices[v]);
    }
    g.edge_a.assign(edge_count, 0);
    g.edge_b.assign(edge_count, 0);
    g.incident.assign(node_ids.size(), {});

    LoopDecomposition out;
    std::vector<bool> active(edge_count, false);
    std::vector<std::size_t> stranded;
    std::vector<std::size_t> degree(node_ids.size(), 0);

    for (auto e : order) {
        const auto& edge = sketch.edges[e];
        if (edge.vertex_ids.size() == 4 &&
            std::all_of(edge.vertex_ids.begin(), edge.vertex_ids.end(),
                        [&](std::size_t id) { return id < vertex_count; })) {
            out.loops.push_back(Loop{{LoopCurve{e, false}}});
            continue;
        }
        if (!is_open_curve(edge, vertex_count)) {
            stranded.push_back(e);
            continue;
        }
        g.edge_a[e] = g.node_of_vertex[edge.vertex_ids.front()];
        g.edge_b[e] = g.node_of_vertex[edge.vertex_ids.back()];
        if (g.edge_a[e] == g.edge_b[e]) {
            stranded.push_back(e);
            continue;
        }
        active[e] = true;
        g.incident[g.edge_a[e]].push_back(e);
        g.incident[g.edge_b[e]].push_back(e);
        ++degree[g.edge_a[e]];
        ++degree[g.edge_b[e]];
    }

    auto deactivate = [&](std::size_t e) {
        active[e] = false;
        --degree[g.edge_a[e]];
        --degree[g.edge_b[e]];
    };

    auto prune = [&]() {
        std::deque<std::size_t> queue;
        for (std::size_t n = 0; n < degree.size(); ++n) {
            if (degree[n] == 1) {
                queue.push_back(n);
            }
        }
        while (!queue.empty()) {
            const auto n = queue.front();
            queue.pop_front();
            if (degree[n] != 1) {
                continue;
            }
            for (auto e : g.incident[n]) {
                if (!active[e]) {
                    continue;
                }
                deactivate(e);
                stranded.push_back(e);
                const auto other = g.edge_a[e] == n ? g.edge_b[e] : g.edge_a[e];
                if (degree[other] == 1) {
                    queue.push_back(other);
                }
                break;
            }
        }
    };

    // Shortest path from `from` to `to` over active edges, excluding `skip`.
    auto shortest_path = [&](std::size_t from, std::size_t to, std::size_t skip)
        -> std::optional<std::vector<LoopCurve>> {
        std::vector<std::optional<std::size_t>> via(degree.size());
        std::vector<bool> seen(degree.size(), false);
        std::deque<std::size_t> queue{from};
        seen[from] = true;
        while (!queue.empty()) {
            const auto n = queue.front();
            queue.pop_front();
            if (n == to) {
                break;
            }
            for (auto e : g.incident[n]) {
                if (!active[e] || e == skip) {
                    continue;
                }
                const auto other = g.edge_a[e] == n ? g.edge_b[e] : g.edge_a[e];
                if (!seen[other]) {
                    seen[other] = true;
                    via[other] = e;
                    queue.push_back(other);
                }
            }
        }
        if (!seen[to]) {
            return std::nullopt;
        }
        std::vector<LoopCurve> path;
        for (auto n = to; n != from;) {
            const auto e = *via[n];
            const bool forward = g.edge_b[e] == n;
            path.push_back({e, !forward});
            n = forward ? g.edge_a[e] : g.edge_b[e];
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    std::vector<Loop> cycles;
    for (;;) {
        prune();
        std::optional<std::size_t> seed;
        for (auto e : order) {
            if (active[e]) {
                seed = e;
                break;
            }
        }
        if (!seed) {
            break;
        }
        const auto e0 = *seed;
        auto path = shortest_path(g.edge_b[e0], g.edge_a[e0], e0);
        if (!path) {
            deactivate(e0);
            stranded.push_back(e0);
            continue;
        }
        Loop loop;
        loop.curves.push_back({e0, false});
        loop.curves.insert(loop.curves.end(), path->begin(), path->end());
        for (const auto& c : loop.curves) {
            deactivate(c.edge);
        }
        cycles.push_back(std::move(loop));
    }
    out.loops.insert(out.loops.end(), cycles.begin(), cycles.end());

    auto loop_rank = [&](const Loop& l) {
        std::size_t best = edge_count;
        for (const auto& c : l.curves) {
            best = std::min(best, rank[c.edge]);
        }
        return best;
    };
    std::stable_sort(out.loops.begin(), out.loops.end(),
                     [&](const Loop& a, const Loop& b) { return loop_rank(a) < loop_rank(b); });

    // Group stranded edges into connected chains through shared vertex coordinates.
    std::sort(stranded.begin(), stranded.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
    std::vector<std::size_t> parent(stranded.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    std::map<std::size_t, std::size_t> owner; // node -> stranded slot
    for (std::size_t i = 0; i < stranded.size(); ++i) {
        for (auto id : sketch.edges[stranded[i]].vertex_ids) {
            if (id >= vertex_count) {
                continue;
            }
            const auto node = g.node_of_vertex[id];
            auto [it, inserted] = owner.try_emplace(node, i);
            if (!inserted) {
                const auto a = find(it->second);
                const auto b = find(i);
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    std::map<std::size_t, std::size_t> chain_of_root;
    for (std::size_t i = 0; i < stranded.size(); ++i) {
        const auto root = find(i);
        auto [it, inserted] = chain_of_root.try_emplace(root, out.open_chains.size());
        if (inserted) {
            out.open_chains.emplace_back();
        }
        out.open_chains[it->second].push_back(stranded[i]);
    }
    return out;
}

} // namespace sketchgen::sketch
