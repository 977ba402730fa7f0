#pragma once

#include <acyc/collapse.hpp>
#include <acyc/edge_list.hpp>
#include <acyc/graph.hpp>
#include <acyc/kappa.hpp>
#include <acyc/orientation.hpp>
#include <acyc/tutte.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace acyc {

struct VerifyCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct VerifyOptions {
    BruteForceLimits limits;
    bool collapse = true;  // build and check the collapse graph for every cycle-edge
};

// Differential check of one graph across all engines.
struct GraphVerification {
    std::string graph;  // describe(g)
    std::string hash;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    bool connected = false;
    std::uint64_t kappa_bruteforce = 0;
    std::uint64_t kappa_recursion = 0;
    std::int64_t tutte_1_0 = 0;
    std::uint64_t alpha_bruteforce = 0;
    std::int64_t tutte_2_0 = 0;
    std::vector<VerifyCheck> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
    }
};

inline GraphVerification verify_graph(const Multigraph& input, const VerifyOptions& options = {}) {
    require_loop_free(input);
    const Multigraph g = simplify(input).graph;
    check_brute_force_cap(g, options.limits);

    GraphVerification v;
    v.graph = describe(input);
    v.hash = hex64(edge_list_hash(input));
    v.vertices = g.vertex_count();
    v.edges = g.edge_count();
    v.connected = is_connected(g);
    auto check = [&](std::string name, bool passed, std::string detail = {}) {
        v.checks.push_back({std::move(name), passed, std::move(detail)});
    };

    const KappaPartition classes = kappa_partition_bruteforce(g, options.limits);
    v.kappa_bruteforce = classes.class_count();
    v.kappa_recursion = kappa(g).value;
    v.tutte_1_0 = tutte_eval(g, 1, 0);
    v.alpha_bruteforce = classes.orientation_count();
    v.tutte_2_0 = tutte_eval(g, 2, 0);

    check("kappa-agreement",
          v.kappa_bruteforce == v.kappa_recursion && static_cast<std::int64_t>(v.kappa_recursion) == v.tutte_1_0,
          "bruteforce " + std::to_string(v.kappa_bruteforce) + ", recursion " + std::to_string(v.kappa_recursion) +
              ", T(1,0) " + std::to_string(v.tutte_1_0));
    check("alpha-agreement", static_cast<std::int64_t>(v.alpha_bruteforce) == v.tutte_2_0,
          "bruteforce " + std::to_string(v.alpha_bruteforce) + ", T(2,0) " + std::to_string(v.tutte_2_0));

    // kappa(Y) = kappa(Y - e) + kappa(Y / e), every side by brute force
    const auto kinds = classify_edges(g);
    std::size_t recursion_failures = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (kinds[e] != EdgeKind::CycleEdge) {
            continue;
        }
        const auto deleted = kappa_partition_bruteforce(delete_edge(g, e).graph, options.limits).class_count();
        const auto contracted =
            kappa_partition_bruteforce(simplify(contract_edge(g, e).graph).graph, options.limits).class_count();
        if (deleted + contracted != v.kappa_bruteforce) {
            ++recursion_failures;
        }
    }
    check("deletion-contraction", recursion_failures == 0,
          std::to_string(recursion_failures) + " cycle-edges violate the recursion");

    check("cut-equivalence", cut_equivalence_partition(g, options.limits) == classes,
          "closure of cut_equivalent vs click classes");

    // nu along every simple closed path is constant on each class
    const auto cycles = enumerate_simple_cycles(g);
    std::size_t nu_failures = 0;
    for (const auto& path : cycles) {
        for (std::size_t c = 0; c < classes.class_count(); ++c) {
            const auto members = classes.members(c);
            const int first = nu_path(Orientation(classes.graph_ref(), members.front()), path);
            for (Mask o : members.subspan(1)) {
                if (nu_path(Orientation(classes.graph_ref(), o), path) != first) {
                    ++nu_failures;
                    break;
                }
            }
        }
    }
    check("nu-invariance", nu_failures == 0,
          std::to_string(cycles.size()) + " closed paths, " + std::to_string(nu_failures) + " non-constant");

    if (v.connected) {
        std::size_t transversal_failures = 0;
        for (Vertex s = 0; s < g.vertex_count(); ++s) {
            const auto unique = unique_source_orientations(g, s, options.limits);
            std::vector<std::size_t> hits(classes.class_count(), 0);
            for (const auto& o : unique) {
                ++hits[classes.class_of(o.bits())];
            }
            const bool one_each =
                unique.size() == v.kappa_bruteforce && std::all_of(hits.begin(), hits.end(), [](auto h) { return h == 1; });
            bool lands = true;
            for (Mask o : classes.orientations()) {
                const auto normalized = normalize_to_unique_source(Orientation(classes.graph_ref(), o), s);
                lands = lands && has_unique_source(normalized.orientation, s) &&
                        classes.class_of(normalized.orientation.bits()) == classes.class_of(o);
            }
            if (!one_each || !lands) {
                ++transversal_failures;
            }
        }
        check("transversal", transversal_failures == 0,
              std::to_string(transversal_failures) + " vertices fail the unique-source transversal");

        if (options.collapse) {
            std::size_t collapse_failures = 0;
            std::string first_failure;
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                if (kinds[e] != EdgeKind::CycleEdge) {
                    continue;
                }
                const auto report = verify_collapse_structure(build_collapse_graph(g, e, options.limits));
                if (!report.ok()) {
                    ++collapse_failures;
                    for (const auto& c : report.checks) {
                        if (!c.passed && first_failure.empty()) {
                            first_failure = "edge " + std::to_string(e) + ": " + c.name;
                        }
                    }
                }
            }
            check("collapse-structure", collapse_failures == 0,
                  collapse_failures == 0 ? "" : std::to_string(collapse_failures) + " failing edges; " + first_failure);
        }
    }
    return v;
}

}  // namespace acyc
