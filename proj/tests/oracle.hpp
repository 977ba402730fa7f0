#pragma once

// Slow, obvious reference implementations used only by tests. Orientations
// are vectors of tail vertices; nothing here touches the library's bitmask
// machinery.

#include <acyc/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

using acyc::Multigraph;
using acyc::Vertex;

// tails[e] is the tail of edge e
using Tails = std::vector<Vertex>;

inline bool has_directed_cycle(const Multigraph& g, const Tails& tails) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Vertex>> out(n);
    for (std::size_t e = 0; e < tails.size(); ++e) {
        out[tails[e]].push_back(g.edges()[e].other(tails[e]));
    }
    std::vector<int> color(n, 0);
    std::function<bool(Vertex)> dfs = [&](Vertex v) {
        color[v] = 1;
        for (Vertex w : out[v]) {
            if (color[w] == 1 || (color[w] == 0 && dfs(w))) {
                return true;
            }
        }
        color[v] = 2;
        return false;
    };
    for (Vertex v = 0; v < n; ++v) {
        if (color[v] == 0 && dfs(v)) {
            return true;
        }
    }
    return false;
}

inline std::vector<Tails> acyclic_orientations(const Multigraph& g) {
    std::vector<Tails> all;
    const std::size_t m = g.edge_count();
    Tails t(m);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == m) {
            if (!has_directed_cycle(g, t)) {
                all.push_back(t);
            }
            return;
        }
        t[i] = g.edges()[i].a;
        rec(i + 1);
        t[i] = g.edges()[i].b;
        rec(i + 1);
    };
    rec(0);
    return all;
}

inline bool is_source(const Multigraph& g, const Tails& t, Vertex v) {
    for (std::size_t e = 0; e < t.size(); ++e) {
        if (g.edges()[e].touches(v) && t[e] != v) {
            return false;
        }
    }
    return true;
}

inline Tails click(const Multigraph& g, Tails t, Vertex v) {
    for (std::size_t e = 0; e < t.size(); ++e) {
        if (g.edges()[e].touches(v)) {
            t[e] = g.edges()[e].other(v);
        }
    }
    return t;
}

inline std::size_t degree(const Multigraph& g, Vertex v) {
    std::size_t d = 0;
    for (const auto& e : g.edges()) {
        d += e.touches(v);
    }
    return d;
}

// Classes of the click relation, found by BFS from each unvisited orientation.
inline std::vector<std::set<Tails>> click_classes(const Multigraph& g) {
    const auto all = acyclic_orientations(g);
    std::set<Tails> unvisited(all.begin(), all.end());
    std::vector<std::set<Tails>> classes;
    while (!unvisited.empty()) {
        std::set<Tails> cls;
        std::queue<Tails> q;
        q.push(*unvisited.begin());
        unvisited.erase(unvisited.begin());
        while (!q.empty()) {
            Tails t = q.front();
            q.pop();
            cls.insert(t);
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                if (degree(g, v) > 0 && is_source(g, t, v)) {
                    Tails next = click(g, t, v);
                    if (auto it = unvisited.find(next); it != unvisited.end()) {
                        unvisited.erase(it);
                        q.push(next);
                    }
                }
            }
            // clicks are not symmetric as single steps; also walk backwards
            // (a sink whose reversal is a click target)
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                bool sink = degree(g, v) > 0;
                for (std::size_t e = 0; e < t.size() && sink; ++e) {
                    sink = !(g.edges()[e].touches(v) && t[e] == v);
                }
                if (sink) {
                    Tails prev = t;
                    for (std::size_t e = 0; e < t.size(); ++e) {
                        if (g.edges()[e].touches(v)) {
                            prev[e] = v;
                        }
                    }
                    if (auto it = unvisited.find(prev); it != unvisited.end()) {
                        unvisited.erase(it);
                        q.push(prev);
                    }
                }
            }
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

inline std::size_t unique_source_count(const Multigraph& g, Vertex v) {
    std::size_t count = 0;
    for (const auto& t : acyclic_orientations(g)) {
        bool ok = is_source(g, t, v);
        for (Vertex u = 0; ok && u < g.vertex_count(); ++u) {
            ok = u == v || !is_source(g, t, u);
        }
        count += ok;
    }
    return count;
}

inline std::size_t component_count(const Multigraph& g) {
    std::vector<Vertex> parent(g.vertex_count());
    for (Vertex v = 0; v < parent.size(); ++v) {
        parent[v] = v;
    }
    std::function<Vertex(Vertex)> find = [&](Vertex v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (const auto& e : g.edges()) {
        parent[find(e.a)] = find(e.b);
    }
    std::size_t c = 0;
    for (Vertex v = 0; v < parent.size(); ++v) {
        c += find(v) == v;
    }
    return c;
}

// Tutte polynomial by the textbook recursion on the lowest-id edge, with no
// factoring, no memo and no simplification. Keys are (i, j) exponents.
inline std::map<std::pair<int, int>, long long> tutte(const Multigraph& g) {
    std::map<std::pair<int, int>, long long> out;
    const std::size_t m = g.edge_count();
    // find the first edge that is neither loop nor bridge
    for (std::size_t e = 0; e < m; ++e) {
        const auto& edge = g.edges()[e];
        if (edge.is_loop()) {
            continue;
        }
        std::vector<acyc::Edge> rest;
        for (std::size_t f = 0; f < m; ++f) {
            if (f != e) {
                rest.push_back(g.edges()[f]);
            }
        }
        const Multigraph deleted(g.vertex_count(), rest);
        if (component_count(deleted) > component_count(g)) {
            continue;  // bridge
        }
        std::vector<acyc::Edge> merged;
        for (const auto& f : rest) {
            auto relabel = [&](Vertex v) {
                Vertex w = v == edge.b ? edge.a : v;
                return w > edge.b ? w - 1 : w;
            };
            merged.emplace_back(relabel(f.a), relabel(f.b));
        }
        const Multigraph contracted(g.vertex_count() - 1, merged);
        auto a = tutte(deleted);
        for (const auto& [k, c] : tutte(contracted)) {
            a[k] += c;
        }
        return a;
    }
    int loops = 0, bridges = 0;
    for (const auto& edge : g.edges()) {
        (edge.is_loop() ? loops : bridges)++;
    }
    out[{bridges, loops}] = 1;
    return out;
}

}  // namespace oracle
