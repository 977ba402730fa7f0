#pragma once

#include <acyc/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace acyc {

// std::mt19937_64's output sequence is fixed by the standard; the standard
// distributions are not, so draws go through uniform_below.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) {
        return 0;
    }
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r < limit) {
            return r % bound;
        }
    }
}

inline std::uint64_t uniform_between(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + uniform_below(rng, hi - lo + 1);
}

template <class T>
void shuffle(Rng& rng, std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[uniform_below(rng, i)]);
    }
}

inline Multigraph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.emplace_back(v - 1, v);
    }
    return Multigraph(n, std::move(edges));
}

inline Multigraph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    }
    return Multigraph(n, std::move(edges));
}

inline Multigraph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Multigraph(n, std::move(edges));
}

inline Multigraph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) {
        edges.emplace_back(0, v);
    }
    return Multigraph(leaves + 1, std::move(edges));
}

inline Multigraph disjoint_union(const Multigraph& x, const Multigraph& y) {
    std::vector<Edge> edges(x.edges().begin(), x.edges().end());
    const auto shift = static_cast<Vertex>(x.vertex_count());
    for (const Edge& e : y.edges()) {
        edges.emplace_back(e.a + shift, e.b + shift);
    }
    return Multigraph(x.vertex_count() + y.vertex_count(), std::move(edges));
}

// Every connected simple graph on 1..max_vertices labeled vertices, ordered by
// vertex count, then by the bitmask of present pairs (pairs in lexicographic order).
inline std::vector<Multigraph> connected_simple_graphs(std::size_t max_vertices) {
    std::vector<Multigraph> out;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        std::vector<Edge> pairs;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                pairs.emplace_back(u, v);
            }
        }
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << pairs.size()); ++subset) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if ((subset >> i) & 1U) {
                    edges.push_back(pairs[i]);
                }
            }
            Multigraph g(n, std::move(edges));
            if (is_connected(g)) {
                out.push_back(std::move(g));
            }
        }
    }
    return out;
}

// Random labeled tree on exactly n vertices (random recursive tree, then the
// labels are shuffled).
inline Multigraph random_tree(Rng& rng, std::size_t n) {
    std::vector<Vertex> label(n);
    for (Vertex v = 0; v < n; ++v) {
        label[v] = v;
    }
    shuffle(rng, label);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.emplace_back(label[v], label[uniform_below(rng, v)]);
    }
    return Multigraph(n, std::move(edges));
}

// Forest on 1..max_vertices vertices: a random tree, each edge kept with
// probability 3/4.
inline Multigraph random_forest(Rng& rng, std::size_t max_vertices = 12) {
    const std::size_t n = uniform_between(rng, 1, max_vertices);
    const Multigraph tree = random_tree(rng, n);
    std::vector<Edge> kept;
    for (const Edge& e : tree.edges()) {
        if (uniform_below(rng, 4) != 0) {
            kept.push_back(e);
        }
    }
    return Multigraph(n, std::move(kept));
}

struct RandomGraphParams {
    std::size_t min_vertices = 3;
    std::size_t max_vertices = 8;
    std::size_t max_edges = 12;
};

// Connected simple graph: n uniform in [min, max], m uniform in
// [n-1, min(max_edges, n(n-1)/2)], a random spanning tree plus m-n+1 distinct
// extra pairs drawn uniformly.
inline Multigraph random_connected_graph(Rng& rng, const RandomGraphParams& params = {}) {
    const std::size_t n = uniform_between(rng, params.min_vertices, params.max_vertices);
    const std::size_t max_m = std::min(params.max_edges, n * (n - 1) / 2);
    const std::size_t m = uniform_between(rng, std::min(n - 1, max_m), max_m);
    const Multigraph tree = random_tree(rng, n);
    std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
    std::vector<Edge> extra;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (std::find(edges.begin(), edges.end(), Edge(u, v)) == edges.end()) {
                extra.emplace_back(u, v);
            }
        }
    }
    shuffle(rng, extra);
    for (std::size_t i = 0; edges.size() < m && i < extra.size(); ++i) {
        edges.push_back(extra[i]);
    }
    shuffle(rng, edges);
    return Multigraph(n, std::move(edges));
}

struct ErdosRenyiParams {
    std::size_t min_vertices = 3;
    std::size_t max_vertices = 7;
    std::uint64_t p_numerator = 1;  // edge probability p_numerator / p_denominator
    std::uint64_t p_denominator = 2;
    std::size_t max_edges = 12;     // graphs above this are redrawn
};

inline std::string describe(const ErdosRenyiParams& p) {
    return "G(n,p): n uniform in [" + std::to_string(p.min_vertices) + "," + std::to_string(p.max_vertices) +
           "], p = " + std::to_string(p.p_numerator) + "/" + std::to_string(p.p_denominator) +
           ", simple, redrawn while m > " + std::to_string(p.max_edges);
}

inline Multigraph random_erdos_renyi(Rng& rng, const ErdosRenyiParams& params = {}) {
    for (;;) {
        const std::size_t n = uniform_between(rng, params.min_vertices, params.max_vertices);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (uniform_below(rng, params.p_denominator) < params.p_numerator) {
                    edges.emplace_back(u, v);
                }
            }
        }
        if (edges.size() <= params.max_edges) {
            return Multigraph(n, std::move(edges));
        }
    }
}

// Multigraph with parallel edges and (optionally) loops: n in [1, max_vertices],
// m in [0, max_edges], endpoints uniform; a loop is drawn with probability 1/6.
inline Multigraph random_multigraph(Rng& rng, std::size_t max_vertices, std::size_t max_edges, bool loops) {
    const std::size_t n = uniform_between(rng, 1, max_vertices);
    const std::size_t m = uniform_between(rng, 0, max_edges);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
        const auto u = static_cast<Vertex>(uniform_below(rng, n));
        if (loops && uniform_below(rng, 6) == 0) {
            edges.emplace_back(u, u);
            continue;
        }
        if (n < 2) {
            continue;
        }
        auto v = static_cast<Vertex>(uniform_below(rng, n - 1));
        if (v >= u) {
            ++v;
        }
        edges.emplace_back(u, v);
    }
    return Multigraph(n, std::move(edges));
}

}  // namespace acyc
