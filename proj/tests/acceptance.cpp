// Acceptance suite: one PASS/FAIL line per criterion. Usage: acceptance <path-to-acyc-cli>

#include <acyc/acyc.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace acyc;
using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kCycleSeconds = 1.0;
constexpr double kForestSeconds = 1.0;
constexpr double kTripleSeconds = 60.0;
constexpr double kTutteSeconds = 30.0;
constexpr std::uint64_t kRandomSeed = 20240601;
constexpr std::size_t kRandomGraphs = 100;
constexpr std::size_t kForests = 100;
constexpr std::size_t kTutteEdgeLimit = 10;
constexpr std::size_t kLoopyMultigraphs = 200;

struct Outcome {
    bool passed = true;
    std::string detail;
};

// Collects the first few failures without stopping the run.
class Failures {
public:
    void add(const std::string& what) {
        if (count_++ < 3) {
            notes_ += (notes_.empty() ? "" : "; ") + what;
        }
    }
    Outcome outcome(const std::string& summary) const {
        if (count_ == 0) {
            return {true, summary};
        }
        return {false, std::to_string(count_) + " failures: " + notes_};
    }

private:
    std::size_t count_ = 0;
    std::string notes_;
};

std::vector<Multigraph> exhaustive_corpus() { return connected_simple_graphs(5); }

std::vector<Multigraph> random_corpus() {
    Rng rng(kRandomSeed);
    std::vector<Multigraph> out;
    for (std::size_t i = 0; i < kRandomGraphs; ++i) {
        out.push_back(random_connected_graph(rng, {4, 10, 12}));
    }
    return out;
}

std::vector<Multigraph> full_corpus() {
    auto out = exhaustive_corpus();
    const auto extra = random_corpus();
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
}

std::vector<EdgeId> cycle_edges(const Multigraph& g) {
    std::vector<EdgeId> out;
    const auto kinds = classify_edges(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (kinds[e] == EdgeKind::CycleEdge) {
            out.push_back(e);
        }
    }
    return out;
}

Outcome cycle_formula() {
    Failures f;
    for (std::size_t n = 3; n <= 8; ++n) {
        const Multigraph c = cycle_graph(n);
        const std::uint64_t brute = kappa_partition_bruteforce(c).class_count();
        const std::uint64_t rec = kappa(c).value;
        const std::int64_t t10 = tutte_eval(c, 1, 0);
        if (brute != n - 1 || rec != n - 1 || t10 != static_cast<std::int64_t>(n - 1)) {
            f.add("C" + std::to_string(n) + ": " + std::to_string(brute) + "/" + std::to_string(rec) + "/" +
                  std::to_string(t10));
        }
    }
    return f.outcome("C3..C8 give n-1 by brute force, recursion and T(1,0)");
}

Outcome forests() {
    Failures f;
    Rng rng(kRandomSeed + 1);
    for (std::size_t i = 0; i < kForests; ++i) {
        const Multigraph g = random_forest(rng, 12);
        if (kappa(g).value != 1) {
            f.add(describe(g));
        }
    }
    return f.outcome(std::to_string(kForests) + " forests give 1");
}

Outcome triple_agreement(const std::vector<Multigraph>& corpus) {
    Failures f;
    for (const auto& g : corpus) {
        const auto classes = kappa_partition_bruteforce(g);
        const std::uint64_t rec = kappa(g).value;
        const std::int64_t t10 = tutte_eval(g, 1, 0);
        const std::int64_t t20 = tutte_eval(g, 2, 0);
        if (classes.class_count() != rec || static_cast<std::int64_t>(rec) != t10 ||
            static_cast<std::int64_t>(classes.orientation_count()) != t20) {
            f.add(describe(g));
        }
    }
    return f.outcome(std::to_string(corpus.size()) + " graphs, kappa and alpha agree across engines");
}

Outcome deletion_contraction(const std::vector<Multigraph>& corpus) {
    Failures f;
    std::size_t checked = 0;
    for (const auto& g : corpus) {
        const std::size_t whole = kappa_partition_bruteforce(g).class_count();
        for (EdgeId e : cycle_edges(g)) {
            const std::size_t deleted = kappa_partition_bruteforce(delete_edge(g, e).graph).class_count();
            // the contraction keeps its parallel edges; brute force handles them as they are
            const std::size_t contracted = kappa_partition_bruteforce(contract_edge(g, e).graph).class_count();
            ++checked;
            if (whole != deleted + contracted) {
                f.add(describe(g) + " e=" + std::to_string(e));
            }
        }
    }
    return f.outcome(std::to_string(checked) + " cycle-edges, all by brute force");
}

Outcome collapse_structure(const std::vector<Multigraph>& corpus) {
    Failures f;
    std::size_t checked = 0;
    for (const auto& g : corpus) {
        for (EdgeId e : cycle_edges(g)) {
            const CollapseReport r = verify_collapse_structure(build_collapse_graph(g, e));
            ++checked;
            const bool sizes = r.components == kappa_partition_bruteforce(delete_edge(g, e).graph).class_count() &&
                               r.edges == kappa_partition_bruteforce(simplify(contract_edge(g, e).graph).graph)
                                              .class_count() &&
                               r.nodes == r.components + r.edges;
            if (!r.ok() || !sizes) {
                std::string first;
                for (const auto& c : r.checks) {
                    if (!c.passed && first.empty()) {
                        first = c.name;
                    }
                }
                f.add(describe(g) + " e=" + std::to_string(e) + (first.empty() ? " sizes" : " " + first));
            }
        }
    }
    return f.outcome(std::to_string(checked) + " collapse graphs are disjoint paths with the expected sizes");
}

Outcome cut_equals_kappa(const std::vector<Multigraph>& corpus) {
    Failures f;
    for (const auto& g : corpus) {
        if (!(cut_equivalence_partition(g) == kappa_partition_bruteforce(g))) {
            f.add(describe(g));
        }
    }
    return f.outcome(std::to_string(corpus.size()) + " graphs, closure of cut-equivalence equals the classes");
}

Outcome transversal(const std::vector<Multigraph>& corpus) {
    Failures f;
    std::size_t pairs = 0;
    for (const auto& g : corpus) {
        if (!is_connected(g)) {
            continue;
        }
        const auto p = kappa_partition_bruteforce(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            ++pairs;
            const auto unique = unique_source_orientations(g, v);
            std::vector<std::optional<Mask>> member_of(p.class_count());
            bool ok = unique.size() == p.class_count();
            for (const auto& o : unique) {
                auto& slot = member_of[p.class_of(o)];
                ok = ok && !slot;
                slot = o.bits();
            }
            for (Mask m : p.orientations()) {
                const auto n = normalize_to_unique_source(Orientation(p.graph_ref(), m), v);
                const auto& target = member_of[p.class_of(m)];
                ok = ok && target && n.orientation.bits() == *target;
            }
            if (!ok) {
                f.add(describe(g) + " v=" + std::to_string(v));
            }
        }
    }
    return f.outcome(std::to_string(pairs) + " (graph, vertex) pairs");
}

Outcome nu_invariance(const std::vector<Multigraph>& corpus) {
    Failures f;
    std::size_t paths = 0;
    for (const auto& g : corpus) {
        const auto p = kappa_partition_bruteforce(g);
        for (const auto& path : enumerate_simple_cycles(g)) {
            ++paths;
            for (std::size_t c = 0; c < p.class_count(); ++c) {
                const auto members = p.members(c);
                const int first = nu_path(Orientation(p.graph_ref(), members.front()), path);
                for (Mask m : members) {
                    if (nu_path(Orientation(p.graph_ref(), m), path) != first) {
                        f.add(describe(g) + " class " + std::to_string(c));
                        break;
                    }
                }
            }
        }
        for (EdgeId e : cycle_edges(g)) {
            const CollapseGraph cg = build_collapse_graph(g, e);
            const PathSpec through = closed_path_through(g, e);
            for (const auto& edge : cg.edges) {
                const int fwd = nu_path(Orientation(cg.graph, cg.classes->representative(edge.forward_node)), through);
                const int bwd = nu_path(Orientation(cg.graph, cg.classes->representative(edge.backward_node)), through);
                if (fwd - bwd != 2) {
                    f.add(describe(g) + " e=" + std::to_string(e) + " step " + std::to_string(fwd - bwd));
                }
            }
        }
    }
    return f.outcome(std::to_string(paths) + " closed paths constant on classes; collapse steps are +2");
}

Outcome tutte_oracle(const std::vector<Multigraph>& corpus) {
    Failures f;
    std::vector<Multigraph> graphs;
    for (const auto& g : corpus) {
        if (g.edge_count() <= kTutteEdgeLimit) {
            graphs.push_back(g);
        }
    }
    Rng rng(kRandomSeed + 2);
    for (std::size_t i = 0; i < kLoopyMultigraphs; ++i) {
        graphs.push_back(random_multigraph(rng, 7, kTutteEdgeLimit, true));
    }
    std::size_t with_loops = 0;
    for (const auto& g : graphs) {
        with_loops += g.has_loops() ? 1 : 0;
        if (!(tutte_polynomial(g) == tutte_oracle_rank_nullity(g))) {
            f.add(describe(g));
        }
    }
    return f.outcome(std::to_string(graphs.size()) + " graphs (" + std::to_string(with_loops) +
                     " with loops) match the subset expansion");
}

struct Captured {
    int status = -1;
    std::string out;
};

Captured capture(const std::string& cmd) {
    Captured c;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return c;
    }
    char buf[1 << 16];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        c.out.append(buf, got);
    }
    const int raw = pclose(pipe);
    c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return c;
}

Outcome determinism(const std::string& cli) {
    if (cli.empty()) {
        return {false, "no CLI path given"};
    }
    const std::string cmd = "'" + cli + "' verify --corpus small --seed 7 --format json";
    const Captured a = capture(cmd);
    const Captured b = capture(cmd);
    if (a.status != 0 || b.status != 0) {
        return {false, "exit status " + std::to_string(a.status) + "/" + std::to_string(b.status)};
    }
    if (a.out.empty() || a.out != b.out) {
        return {false, "reports differ"};
    }
    return {true, "two runs, " + std::to_string(a.out.size()) + " identical bytes"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    std::cout << "building corpus... " << std::flush;
    const auto exhaustive = exhaustive_corpus();
    const auto full = full_corpus();
    std::cout << exhaustive.size() << " exhaustive + " << full.size() - exhaustive.size() << " random graphs\n";

    struct Criterion {
        int id;
        std::string name;
        std::function<Outcome()> run;
        std::optional<double> limit;
    };
    const std::vector<Criterion> criteria{
        {1, "cycle formula", cycle_formula, kCycleSeconds},
        {2, "forests", forests, kForestSeconds},
        {3, "triple agreement", [&] { return triple_agreement(full); }, kTripleSeconds},
        {4, "deletion/contraction", [&] { return deletion_contraction(full); }, std::nullopt},
        {5, "collapse structure", [&] { return collapse_structure(exhaustive); }, std::nullopt},
        {6, "cut equals kappa", [&] { return cut_equals_kappa(full); }, std::nullopt},
        {7, "transversal", [&] { return transversal(full); }, std::nullopt},
        {8, "nu invariance", [&] { return nu_invariance(exhaustive); }, std::nullopt},
        {9, "tutte oracle", [&] { return tutte_oracle(full); }, kTutteSeconds},
        {10, "determinism", [&] { return determinism(cli); }, std::nullopt},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.limit && seconds >= *c.limit) {
            o = {false, o.detail + "; over the " + std::to_string(*c.limit) + " s limit"};
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (o.passed ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": " << o.detail << " (" << seconds
             << " s)";
        std::cout << line.str() << std::endl;
        failed += o.passed ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
