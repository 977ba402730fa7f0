#pragma once

#include <acyc/checked.hpp>
#include <acyc/errors.hpp>
#include <acyc/graph.hpp>
#include <acyc/graph_key.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace acyc {

// Number of source-to-sink equivalence classes of acyclic orientations,
// computed by deletion/contraction on cycle-edges without enumerating any
// orientation:
//
//   kappa(Y) = kappa(Y - e) + kappa(Y / e)        e a cycle-edge
//   kappa(Y1 + Y2) = kappa(Y1) * kappa(Y2)        disjoint union
//   kappa(Y) = kappa(Y without its bridges)
//   kappa(edgeless) = 1
//
// Every intermediate graph is simplified first; parallel edges never change
// the class count.

enum class KappaRule { Base, Product, BridgePrune, Recursion };

inline const char* to_string(KappaRule r) {
    switch (r) {
        case KappaRule::Base: return "base";
        case KappaRule::Product: return "product";
        case KappaRule::BridgePrune: return "bridge-prune";
        case KappaRule::Recursion: return "recursion";
    }
    return "?";
}

// One step of the recursion. `key` is the graph the step works on, as
// "n:a-b,...", and `edge` is the recursion edge in that graph's labeling.
struct TraceNode {
    std::string key;
    KappaRule rule = KappaRule::Base;
    std::optional<Edge> edge;
    std::vector<TraceNode> children;
    std::uint64_t value = 0;
};

struct CacheStats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
};

struct KappaResult {
    std::uint64_t value = 0;
    std::optional<TraceNode> trace;
    CacheStats cache_stats;
};

inline constexpr std::size_t kKappaEdgeCap = 62;

struct KappaOptions {
    bool memoize = true;
    // Tracing unfolds the whole recursion, so it turns memoization off.
    bool trace = false;
    EdgeChoice edge_choice = EdgeChoice::LexicographicLeast;
    std::uint64_t seed = 0;
};

// Holds the memo cache; one engine per thread, or one per call via kappa().
class KappaEngine {
public:
    explicit KappaEngine(KappaOptions options = {}) : options_(options), rng_(options.seed) {
        if (options_.trace) {
            options_.memoize = false;
        }
    }

    KappaResult run(const Multigraph& g) {
        if (g.has_loops()) {
            throw InputDomainError("kappa: graph has a loop; loops admit no acyclic orientation");
        }
        if (g.edge_count() > kKappaEdgeCap) {
            throw ResourceLimitError("kappa: at most " + std::to_string(kKappaEdgeCap) + " edges supported");
        }
        const CacheStats before = stats_;
        KappaResult result;
        if (options_.trace) {
            TraceNode root;
            result.value = solve(g, &root);
            result.trace = std::move(root);
        } else {
            result.value = solve(g, nullptr);
        }
        result.cache_stats = {stats_.hits - before.hits, stats_.misses - before.misses};
        return result;
    }

    const CacheStats& cache_stats() const noexcept { return stats_; }
    std::size_t cache_size() const noexcept { return memo_.size(); }

private:
    std::uint64_t solve(const Multigraph& g, TraceNode* node) {
        const Multigraph simple = simplify(g).graph;
        const Multigraph core = drop_isolated(cycle_subgraph(simple)).graph;
        const bool pruned = core.edge_count() != simple.edge_count();

        if (core.edge_count() == 0) {
            if (node) {
                *node = {describe(simple), KappaRule::Base, std::nullopt, {}, 1};
            }
            return 1;
        }

        TraceNode* inner = node;
        if (node && pruned) {
            node->key = describe(simple);
            node->rule = KappaRule::BridgePrune;
            node->children.emplace_back();
            inner = &node->children.back();
        }
        const std::uint64_t value = solve_core(core, inner);
        if (node && pruned) {
            node->value = value;
        }
        return value;
    }

    // `core` is simple, bridgeless, without isolated vertices, and non-empty.
    std::uint64_t solve_core(const Multigraph& core, TraceNode* node) {
        const Components comps = connected_components(core);
        if (comps.count() > 1) {
            if (node) {
                node->key = describe(core);
                node->rule = KappaRule::Product;
            }
            std::uint64_t product = 1;
            for (const auto& block : comps.blocks) {
                TraceNode* child = nullptr;
                if (node) {
                    child = &node->children.emplace_back();
                }
                product = checked::mul(product, solve(induced_subgraph(core, block).graph, child));
            }
            if (node) {
                node->value = product;
            }
            return product;
        }

        std::string key;
        if (options_.memoize) {
            key = graph_key(core);
            if (auto it = memo_.find(key); it != memo_.end()) {
                ++stats_.hits;
                return it->second;
            }
            ++stats_.misses;
        }

        const EdgeId e = choose_edge(core);
        if (node) {
            node->key = describe(core);
            node->rule = KappaRule::Recursion;
            node->edge = core.edge(e);
            node->children.resize(2);
        }
        const std::uint64_t deleted = solve(delete_edge(core, e).graph, node ? &node->children[0] : nullptr);
        const std::uint64_t contracted = solve(contract_edge(core, e).graph, node ? &node->children[1] : nullptr);
        const std::uint64_t value = checked::add(deleted, contracted);
        if (node) {
            node->value = value;
        }
        if (options_.memoize) {
            memo_.emplace(std::move(key), value);
        }
        return value;
    }

    EdgeId choose_edge(const Multigraph& core) {
        if (options_.edge_choice == EdgeChoice::Random) {
            return static_cast<EdgeId>(rng_() % core.edge_count());
        }
        EdgeId best = 0;
        for (EdgeId id = 1; id < core.edge_count(); ++id) {
            if (core.edge(id) < core.edge(best)) {
                best = id;
            }
        }
        return best;
    }

    KappaOptions options_;
    std::mt19937_64 rng_;
    std::unordered_map<std::string, std::uint64_t> memo_;
    CacheStats stats_;
};

inline KappaResult kappa(const Multigraph& g, KappaOptions options = {}) {
    return KappaEngine(options).run(g);
}

inline KappaResult kappa_with_trace(const Multigraph& g) {
    KappaOptions options;
    options.trace = true;
    return KappaEngine(options).run(g);
}

}  // namespace acyc
