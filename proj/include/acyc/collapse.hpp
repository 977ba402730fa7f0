#pragma once

#include <acyc/disjoint_sets.hpp>
#include <acyc/errors.hpp>
#include <acyc/graph.hpp>
#include <acyc/kappa.hpp>
#include <acyc/orientation.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace acyc {

// The two lifts of an orientation of Y/e back to Y. With e = {a, b}, a < b:
// Forward orients e as a -> b, Backward as b -> a.
enum class IotaDirection { Forward = 1, Backward = 2 };

// Lifts masks of simplify(contract_edge(g, e)) to masks of g.
class IotaLift {
public:
    IotaLift(const Multigraph& g, EdgeId e) : g_(g), e_(e) {
        require_loop_free(g);
        const auto kinds = classify_edges(g);
        if (kinds.at(e) != EdgeKind::CycleEdge) {
            throw InputDomainError("edge " + std::to_string(e) + " is a " + to_string(kinds[e]) +
                                   ", not a cycle-edge");
        }
        const Contraction c = contract_edge(g, e);
        const Simplification s = simplify(c.graph);
        contracted_ = s.graph;
        target_.assign(g.edge_count(), std::nullopt);
        flip_.assign(g.edge_count(), false);
        for (EdgeId f = 0; f < g.edge_count(); ++f) {
            if (f == e || !c.edge_map[f] || !s.edge_map[*c.edge_map[f]]) {
                continue;  // e itself, or an edge parallel to e
            }
            const EdgeId image = *s.edge_map[*c.edge_map[f]];
            target_[f] = image;
            // f runs a->b iff its image runs from vertex_map[a]; images are
            // canonical, so that means the image's smaller endpoint is vertex_map[a]
            flip_[f] = contracted_.edge(image).a != c.vertex_map[g.edge(f).a];
        }
    }

    const Multigraph& contracted() const noexcept { return contracted_; }
    EdgeId edge() const noexcept { return e_; }

    Mask lift(Mask contracted_bits, IotaDirection dir) const {
        const bool e_reversed = dir == IotaDirection::Backward;
        Mask bits = 0;
        for (EdgeId f = 0; f < g_.edge_count(); ++f) {
            bool reversed = e_reversed;  // e, and edges parallel to it
            if (target_[f]) {
                reversed = (((contracted_bits >> *target_[f]) & 1U) != 0) != flip_[f];
            }
            if (reversed) {
                bits |= Mask{1} << f;
            }
        }
        return bits;
    }

private:
    Multigraph g_;
    EdgeId e_;
    Multigraph contracted_;
    std::vector<std::optional<EdgeId>> target_;
    std::vector<bool> flip_;
};

// iota_1 / iota_2: orient e as a->b / b->a and inherit every other edge from
// an acyclic orientation of simplify(contract_edge(g, e)).
inline Orientation iota(const Orientation& contracted, IotaDirection dir, const Multigraph& g, EdgeId e) {
    const IotaLift lift(g, e);
    if (contracted.graph() != lift.contracted()) {
        throw InputDomainError("iota: orientation is not on simplify(contract_edge(g, e))");
    }
    if (!is_acyclic(contracted)) {
        throw PreconditionError("iota: orientation is not acyclic");
    }
    Orientation out(g, lift.lift(contracted.bits(), dir));
    if (!is_acyclic(out)) {
        throw InternalInvariantError("iota produced a cyclic orientation");
    }
    return out;
}

struct CollapseEdge {
    std::size_t forward_node = 0;   // class of the Forward lift
    std::size_t backward_node = 0;  // class of the Backward lift
    Mask label = 0;                 // representative of the inducing class of Y/e
};

// Nodes are the classes of Acyc(g); one edge per class of Acyc(simplify(g/e)),
// joining the classes of its two lifts.
struct CollapseGraph {
    GraphRef graph;
    EdgeId cycle_edge = 0;
    std::shared_ptr<const KappaPartition> classes;             // nodes
    std::shared_ptr<const KappaPartition> contracted_classes;  // edge labels
    std::vector<CollapseEdge> edges;
    // Classes of Y/e whose members do not all lift into one class of g.
    std::vector<std::size_t> ill_defined;

    std::size_t node_count() const { return classes->class_count(); }
    std::size_t edge_count() const { return edges.size(); }
};

inline CollapseGraph build_collapse_graph(const Multigraph& g, EdgeId e, const BruteForceLimits& limits = {}) {
    if (!is_simple(g)) {
        throw InputDomainError("collapse graph requires a simple graph");
    }
    if (!is_connected(g)) {
        throw InputDomainError("collapse graph requires a connected graph");
    }
    check_brute_force_cap(g, limits);
    const IotaLift lift(g, e);

    CollapseGraph cg;
    cg.graph = std::make_shared<const Multigraph>(g);
    cg.cycle_edge = e;
    cg.classes = std::make_shared<const KappaPartition>(kappa_partition_bruteforce(g, limits));
    cg.contracted_classes = std::make_shared<const KappaPartition>(kappa_partition_bruteforce(lift.contracted(), limits));

    for (std::size_t k = 0; k < cg.contracted_classes->class_count(); ++k) {
        const auto members = cg.contracted_classes->members(k);
        CollapseEdge edge;
        edge.label = members.front();
        edge.forward_node = cg.classes->class_of(lift.lift(edge.label, IotaDirection::Forward));
        edge.backward_node = cg.classes->class_of(lift.lift(edge.label, IotaDirection::Backward));
        for (Mask o : members) {
            if (cg.classes->class_of(lift.lift(o, IotaDirection::Forward)) != edge.forward_node ||
                cg.classes->class_of(lift.lift(o, IotaDirection::Backward)) != edge.backward_node) {
                cg.ill_defined.push_back(k);
                break;
            }
        }
        cg.edges.push_back(edge);
    }
    return cg;
}

struct CollapseCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct CollapseReport {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t components = 0;
    std::uint64_t kappa_deleted = 0;     // kappa(g - e), recursion engine
    std::uint64_t kappa_contracted = 0;  // kappa(g / e), recursion engine
    std::vector<CollapseCheck> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const CollapseCheck& c) { return c.passed; });
    }

    const CollapseCheck* find(const std::string& name) const {
        for (const auto& c : checks) {
            if (c.name == name) {
                return &c;
            }
        }
        return nullptr;
    }
};

inline CollapseReport verify_collapse_structure(const CollapseGraph& cg) {
    const Multigraph& g = *cg.graph;
    const EdgeId e = cg.cycle_edge;
    const std::size_t n_nodes = cg.node_count();

    CollapseReport report;
    report.nodes = n_nodes;
    report.edges = cg.edge_count();
    auto check = [&](std::string name, bool passed, std::string detail = {}) {
        report.checks.push_back({std::move(name), passed, std::move(detail)});
    };

    check("lifts-well-defined", cg.ill_defined.empty(),
          cg.ill_defined.empty() ? "" : std::to_string(cg.ill_defined.size()) + " classes of Y/e lift inconsistently");

    std::size_t self_loops = 0;
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t repeated_pairs = 0;
    std::vector<std::size_t> degree(n_nodes, 0);
    std::set<std::size_t> forward_seen, backward_seen;
    for (const auto& edge : cg.edges) {
        if (edge.forward_node == edge.backward_node) {
            ++self_loops;
        }
        const auto key = std::minmax(edge.forward_node, edge.backward_node);
        if (!pairs.insert(key).second) {
            ++repeated_pairs;
        }
        ++degree[edge.forward_node];
        ++degree[edge.backward_node];
        forward_seen.insert(edge.forward_node);
        backward_seen.insert(edge.backward_node);
    }
    check("lifts-differ", self_loops == 0, std::to_string(self_loops) + " self-loops");
    check("forward-lift-injective", forward_seen.size() == cg.edges.size());
    check("backward-lift-injective", backward_seen.size() == cg.edges.size());
    check("simple", repeated_pairs == 0, std::to_string(repeated_pairs) + " repeated node pairs");
    const std::size_t max_degree = n_nodes == 0 ? 0 : *std::max_element(degree.begin(), degree.end());
    check("max-degree-two", max_degree <= 2, "max degree " + std::to_string(max_degree));

    DisjointSets comps(n_nodes);
    std::size_t cycle_closers = 0;
    for (const auto& edge : cg.edges) {
        if (!comps.unite(edge.forward_node, edge.backward_node)) {
            ++cycle_closers;
        }
    }
    check("acyclic", cycle_closers == 0, std::to_string(cycle_closers) + " cycle-closing edges");
    report.components = comps.set_count();

    std::map<std::size_t, std::pair<std::size_t, std::size_t>> per_component;  // root -> (nodes, edges)
    for (std::size_t c = 0; c < n_nodes; ++c) {
        ++per_component[comps.find(c)].first;
    }
    for (const auto& edge : cg.edges) {
        ++per_component[comps.find(edge.forward_node)].second;
    }
    bool paths = true;
    for (const auto& [root, counts] : per_component) {
        paths = paths && counts.second + 1 == counts.first;
    }
    check("components-are-paths", paths && max_degree <= 2 && cycle_closers == 0,
          "every component with k nodes has k-1 edges");

    const Deletion deleted = delete_edge(g, e);
    report.kappa_deleted = kappa(deleted.graph).value;
    report.kappa_contracted = kappa(contract_edge(g, e).graph).value;
    check("components-match-deletion", report.components == report.kappa_deleted,
          std::to_string(report.components) + " components vs kappa(Y-e) = " + std::to_string(report.kappa_deleted));
    check("edges-match-contraction", report.edges == report.kappa_contracted,
          std::to_string(report.edges) + " edges vs kappa(Y/e) = " + std::to_string(report.kappa_contracted));
    check("nodes-equal-components-plus-edges", n_nodes == report.components + report.edges,
          std::to_string(n_nodes) + " = " + std::to_string(report.components) + " + " + std::to_string(report.edges));

    // Transport each node's representative to g - e and compare with the
    // brute-force classes there: one class per component, and no sharing.
    const KappaPartition deleted_classes = kappa_partition_bruteforce(deleted.graph, {g.edge_count()});
    auto transport = [&](Mask bits) {
        Mask out = 0;
        for (EdgeId f = 0; f < g.edge_count(); ++f) {
            if (deleted.edge_map[f] && ((bits >> f) & 1U)) {
                out |= Mask{1} << *deleted.edge_map[f];
            }
        }
        return out;
    };
    std::map<std::size_t, std::set<std::size_t>> deleted_class_of_component;
    std::map<std::size_t, std::set<std::size_t>> component_of_deleted_class;
    for (std::size_t c = 0; c < n_nodes; ++c) {
        const std::size_t dc = deleted_classes.class_of(transport(cg.classes->representative(c)));
        deleted_class_of_component[comps.find(c)].insert(dc);
        component_of_deleted_class[dc].insert(comps.find(c));
    }
    bool bijective = component_of_deleted_class.size() == deleted_classes.class_count();
    for (const auto& [root, classes] : deleted_class_of_component) {
        bijective = bijective && classes.size() == 1;
    }
    for (const auto& [dc, roots] : component_of_deleted_class) {
        bijective = bijective && roots.size() == 1;
    }
    check("components-biject-deletion-classes", bijective,
          std::to_string(report.components) + " components vs " + std::to_string(deleted_classes.class_count()) +
              " classes of Y-e");

    const PathSpec through_e = closed_path_through(g, e);
    std::size_t bad_steps = 0;
    for (const auto& edge : cg.edges) {
        const int forward = nu_path(Orientation(cg.graph, cg.classes->representative(edge.forward_node)), through_e);
        const int backward = nu_path(Orientation(cg.graph, cg.classes->representative(edge.backward_node)), through_e);
        if (forward - backward != 2) {
            ++bad_steps;
        }
    }
    check("nu-steps-by-two", bad_steps == 0, std::to_string(bad_steps) + " edges without a +2 step");
    return report;
}

// DOT text: nodes labeled by class-representative hex masks, edges by the
// representative of the inducing class of Y/e.
inline std::string collapse_to_dot(const CollapseGraph& cg) {
    const Edge e = cg.graph->edge(cg.cycle_edge);
    std::string dot = "graph collapse {\n";
    dot += "  // cycle edge " + std::to_string(cg.cycle_edge) + " = {" + std::to_string(e.a) + "," +
           std::to_string(e.b) + "}\n";
    for (std::size_t c = 0; c < cg.node_count(); ++c) {
        dot += "  n" + std::to_string(c) + " [label=\"" + Orientation::hex_bits(cg.classes->representative(c)) +
               "\"];\n";
    }
    for (const auto& edge : cg.edges) {
        dot += "  n" + std::to_string(edge.forward_node) + " -- n" + std::to_string(edge.backward_node) +
               " [label=\"" + Orientation::hex_bits(edge.label) + "\"];\n";
    }
    dot += "}\n";
    return dot;
}

}  // namespace acyc
