#pragma once

#include <acyc/errors.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace acyc {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Undirected edge, stored canonically with a <= b. a == b is a loop.
struct Edge {
    Vertex a = 0;
    Vertex b = 0;

    Edge() = default;
    Edge(Vertex u, Vertex v) : a(std::min(u, v)), b(std::max(u, v)) {}

    bool is_loop() const noexcept { return a == b; }
    bool touches(Vertex v) const noexcept { return a == v || b == v; }
    Vertex other(Vertex v) const noexcept { return v == a ? b : a; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Old edge-id -> new edge-id; nullopt when the edge did not survive.
using EdgeMap = std::vector<std::optional<EdgeId>>;

// A labeled undirected multigraph on vertices 0..n-1. Parallel edges and
// loops are allowed; an edge is addressed by its position in the edge list.
// Values are immutable; every structural operation returns a new graph.
class Multigraph {
public:
    Multigraph() = default;

    explicit Multigraph(std::size_t vertex_count, std::vector<Edge> edges = {})
        : n_(vertex_count), edges_(std::move(edges)) {
        for (const Edge& e : edges_) {
            if (e.b >= n_) {
                throw InputDomainError("edge {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                       "} references a vertex >= " + std::to_string(n_));
            }
        }
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::size_t loop_count() const noexcept {
        return static_cast<std::size_t>(
            std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
    }

    bool has_loops() const noexcept { return loop_count() > 0; }

    const Edge& edge(EdgeId id) const {
        if (id >= edges_.size()) {
            throw InputDomainError("edge id " + std::to_string(id) + " out of range (m = " +
                                   std::to_string(edges_.size()) + ")");
        }
        return edges_[id];
    }

    std::span<const Edge> edges() const noexcept { return edges_; }

    std::size_t degree(Vertex v) const {
        std::size_t d = 0;
        for (const Edge& e : edges_) {
            d += (e.a == v) + (e.b == v);
        }
        return d;
    }

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

enum class EdgeKind { Bridge, CycleEdge, Loop };

inline const char* to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::Bridge: return "bridge";
        case EdgeKind::CycleEdge: return "cycle-edge";
        case EdgeKind::Loop: return "loop";
    }
    return "?";
}

struct Deletion {
    Multigraph graph;
    EdgeMap edge_map;
};

struct Contraction {
    Multigraph graph;
    std::vector<Vertex> vertex_map;  // old vertex -> new vertex
    EdgeMap edge_map;
};

struct Simplification {
    Multigraph graph;
    // Every member of a parallel class maps to the surviving edge; loops map to nullopt.
    EdgeMap edge_map;
};

struct Components {
    std::vector<std::size_t> component_of;  // vertex -> block index
    std::vector<std::vector<Vertex>> blocks;  // ordered by smallest member

    std::size_t count() const noexcept { return blocks.size(); }
};

struct Subgraph {
    Multigraph graph;
    std::vector<Vertex> vertices;  // new vertex -> original vertex
    std::vector<EdgeId> edges;     // new edge id -> original edge id
};

// Incidence lists: for each vertex, (neighbor, edge-id) pairs. A loop appears once.
using Adjacency = std::vector<std::vector<std::pair<Vertex, EdgeId>>>;

inline Adjacency adjacency(const Multigraph& g) {
    Adjacency adj(g.vertex_count());
    const auto edges = g.edges();
    for (EdgeId id = 0; id < edges.size(); ++id) {
        const Edge& e = edges[id];
        adj[e.a].emplace_back(e.b, id);
        if (!e.is_loop()) {
            adj[e.b].emplace_back(e.a, id);
        }
    }
    return adj;
}

// Keeps the edges for which `keep(id)` is true, preserving their relative order.
inline Deletion filter_edges(const Multigraph& g, const std::function<bool(EdgeId)>& keep) {
    std::vector<Edge> kept;
    EdgeMap map(g.edge_count());
    const auto edges = g.edges();
    for (EdgeId id = 0; id < edges.size(); ++id) {
        if (keep(id)) {
            map[id] = static_cast<EdgeId>(kept.size());
            kept.push_back(edges[id]);
        }
    }
    return {Multigraph(g.vertex_count(), std::move(kept)), std::move(map)};
}

inline Deletion delete_edge(const Multigraph& g, EdgeId e) {
    g.edge(e);  // range check
    return filter_edges(g, [e](EdgeId id) { return id != e; });
}

// Merges the endpoints of e into the smaller label; higher labels shift down by
// one. Parallel edges and loops created along the way are kept.
inline Contraction contract_edge(const Multigraph& g, EdgeId e) {
    const Edge target = g.edge(e);
    if (target.is_loop()) {
        throw InputDomainError("cannot contract loop edge " + std::to_string(e));
    }
    const Vertex keep = target.a;
    const Vertex gone = target.b;

    std::vector<Vertex> vmap(g.vertex_count());
    for (Vertex v = 0; v < vmap.size(); ++v) {
        if (v == gone) {
            vmap[v] = keep;
        } else {
            vmap[v] = v > gone ? v - 1 : v;
        }
    }

    std::vector<Edge> out;
    EdgeMap emap(g.edge_count());
    const auto edges = g.edges();
    for (EdgeId id = 0; id < edges.size(); ++id) {
        if (id == e) {
            continue;
        }
        emap[id] = static_cast<EdgeId>(out.size());
        out.emplace_back(vmap[edges[id].a], vmap[edges[id].b]);
    }
    return {Multigraph(g.vertex_count() - 1, std::move(out)), std::move(vmap), std::move(emap)};
}

inline Components connected_components(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    Components c;
    c.component_of.assign(n, SIZE_MAX);
    const Adjacency adj = adjacency(g);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (c.component_of[s] != SIZE_MAX) {
            continue;
        }
        const std::size_t idx = c.blocks.size();
        c.blocks.emplace_back();
        c.component_of[s] = idx;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            c.blocks[idx].push_back(v);
            for (auto [w, id] : adj[v]) {
                if (c.component_of[w] == SIZE_MAX) {
                    c.component_of[w] = idx;
                    stack.push_back(w);
                }
            }
        }
        std::sort(c.blocks[idx].begin(), c.blocks[idx].end());
    }
    return c;
}

inline bool is_connected(const Multigraph& g) { return connected_components(g).count() <= 1; }

// Bridge detection by DFS low-links. The tree edge is skipped by id, not by
// endpoint, so a parallel partner still counts as a back edge.
inline std::vector<EdgeKind> classify_edges(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    const Adjacency adj = adjacency(g);
    std::vector<EdgeKind> kinds(g.edge_count(), EdgeKind::CycleEdge);
    std::vector<std::size_t> disc(n, 0), low(n, 0);
    std::size_t timer = 0;

    struct Frame {
        Vertex v;
        std::optional<EdgeId> via;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != 0) {
            continue;
        }
        disc[root] = low[root] = ++timer;
        stack.push_back({root, std::nullopt});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                auto [w, id] = adj[f.v][f.next++];
                if (w == f.v || (f.via && *f.via == id)) {
                    continue;
                }
                if (disc[w] == 0) {
                    disc[w] = low[w] = ++timer;
                    stack.push_back({w, id});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                const Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& parent = stack.back();
                    low[parent.v] = std::min(low[parent.v], low[done.v]);
                    if (low[done.v] > disc[parent.v]) {
                        kinds[*done.via] = EdgeKind::Bridge;
                    }
                }
            }
        }
    }

    const auto edges = g.edges();
    for (EdgeId id = 0; id < edges.size(); ++id) {
        if (edges[id].is_loop()) {
            kinds[id] = EdgeKind::Loop;
        }
    }
    return kinds;
}

// Cycle(Y): every bridge removed, vertex set unchanged.
inline Deletion delete_bridges(const Multigraph& g) {
    const auto kinds = classify_edges(g);
    return filter_edges(g, [&](EdgeId id) { return kinds[id] != EdgeKind::Bridge; });
}

inline Multigraph cycle_subgraph(const Multigraph& g) { return delete_bridges(g).graph; }

// Drops loops and collapses each parallel class onto its lowest edge-id.
inline Simplification simplify(const Multigraph& g) {
    std::vector<Edge> out;
    EdgeMap map(g.edge_count());
    std::vector<std::pair<Edge, EdgeId>> seen;  // sorted (edge, new id)
    const auto edges = g.edges();
    for (EdgeId id = 0; id < edges.size(); ++id) {
        const Edge& e = edges[id];
        if (e.is_loop()) {
            continue;
        }
        auto it = std::lower_bound(seen.begin(), seen.end(), e,
                                   [](const auto& p, const Edge& key) { return p.first < key; });
        if (it != seen.end() && it->first == e) {
            map[id] = it->second;
            continue;
        }
        const auto new_id = static_cast<EdgeId>(out.size());
        seen.insert(it, {e, new_id});
        map[id] = new_id;
        out.push_back(e);
    }
    return {Multigraph(g.vertex_count(), std::move(out)), std::move(map)};
}

inline bool is_simple(const Multigraph& g) {
    return !g.has_loops() && simplify(g).graph.edge_count() == g.edge_count();
}

// Subgraph induced by `vertices` (any order; relabeled 0..k-1 in the given order).
inline Subgraph induced_subgraph(const Multigraph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> relabel(g.vertex_count(), UINT32_MAX);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        relabel[vertices[i]] = static_cast<Vertex>(i);
    }
    Subgraph s;
    s.vertices.assign(vertices.begin(), vertices.end());
    std::vector<Edge> out;
    const auto edges = g.edges();
    for (EdgeId id = 0; id < edges.size(); ++id) {
        const Edge& e = edges[id];
        if (relabel[e.a] != UINT32_MAX && relabel[e.b] != UINT32_MAX) {
            out.emplace_back(relabel[e.a], relabel[e.b]);
            s.edges.push_back(id);
        }
    }
    s.graph = Multigraph(vertices.size(), std::move(out));
    return s;
}

// Vertices with at least one incident edge, relabeled in increasing order.
inline Subgraph drop_isolated(const Multigraph& g) {
    std::vector<bool> used(g.vertex_count(), false);
    for (const Edge& e : g.edges()) {
        used[e.a] = used[e.b] = true;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < used.size(); ++v) {
        if (used[v]) {
            keep.push_back(v);
        }
    }
    return induced_subgraph(g, keep);
}

}  // namespace acyc
