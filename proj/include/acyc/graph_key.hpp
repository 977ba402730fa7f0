#pragma once

#include <acyc/graph.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace acyc {

// Which cycle-edge a deletion/contraction step splits on. Random is seeded and
// exists for differential testing; results never depend on the choice.
enum class EdgeChoice { LexicographicLeast, Random };

// Memo key for the deletion/contraction engines. Vertices are relabeled in
// BFS order, starting from the highest-degree vertex and visiting neighbors by
// (degree desc, label asc); the relabeled edge list is sorted and serialized
// with multiplicities and loops. Isomorphic graphs usually, but not always,
// share a key; equal keys always mean isomorphic graphs.
inline std::string graph_key(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n, 0);
    for (const Edge& e : g.edges()) {
        ++deg[e.a];
        ++deg[e.b];
    }
    auto before = [&](Vertex x, Vertex y) { return deg[x] != deg[y] ? deg[x] > deg[y] : x < y; };

    std::vector<Vertex> by_rank(n);
    for (Vertex v = 0; v < n; ++v) {
        by_rank[v] = v;
    }
    std::sort(by_rank.begin(), by_rank.end(), before);

    const Adjacency adj = adjacency(g);
    std::vector<Vertex> label(n, UINT32_MAX);
    Vertex next = 0;
    std::vector<Vertex> queue;
    for (Vertex root : by_rank) {
        if (label[root] != UINT32_MAX) {
            continue;
        }
        label[root] = next++;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::vector<Vertex> nbrs;
            for (auto [w, id] : adj[queue[head]]) {
                if (label[w] == UINT32_MAX) {
                    nbrs.push_back(w);
                }
            }
            std::sort(nbrs.begin(), nbrs.end(), before);
            for (Vertex w : nbrs) {
                if (label[w] == UINT32_MAX) {
                    label[w] = next++;
                    queue.push_back(w);
                }
            }
        }
    }

    std::vector<Edge> relabeled;
    relabeled.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        relabeled.emplace_back(label[e.a], label[e.b]);
    }
    std::sort(relabeled.begin(), relabeled.end());

    std::string key = std::to_string(n) + ":";
    for (const Edge& e : relabeled) {
        key += std::to_string(e.a);
        key += '-';
        key += std::to_string(e.b);
        key += ',';
    }
    return key;
}

// The graph's own edge list, "n:a-b,a-b,..." in edge-id order.
inline std::string describe(const Multigraph& g) {
    std::string s = std::to_string(g.vertex_count()) + ":";
    bool first = true;
    for (const Edge& e : g.edges()) {
        if (!first) {
            s += ',';
        }
        first = false;
        s += std::to_string(e.a) + "-" + std::to_string(e.b);
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Multigraph& g) { return os << describe(g); }

}  // namespace acyc
