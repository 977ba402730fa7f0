// acyc: command-line front end for the acyc library.
//
// Exit codes: 0 success, 2 bad input (parse, domain, usage), 3 a size cap was
// exceeded, 4 a verification mismatch or internal error.

#include <acyc/acyc.hpp>
#include <acyc/json_io.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace acyc;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitMismatch = 4;

struct Config {
    std::string format = "text";
    std::size_t cap = kDefaultBruteForceCap;
    std::uint64_t seed = 0;
    std::string input = "-";

    bool trace = false;
    bool random_edges = false;
    std::pair<std::int64_t, std::int64_t> point;
    Vertex vertex = 0;
    EdgeId edge = 0;
    std::string path;
    std::string per = "class";
    std::string corpus;
    std::size_t random_corpus = 0;

    bool json() const { return format == "json"; }
    BruteForceLimits limits() const { return {cap}; }
};

struct Loaded {
    Multigraph graph;
    std::string hash;
};

Loaded load(const std::string& path) {
    Multigraph g;
    if (path == "-") {
        g = parse_edge_list(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) {
            throw InputDomainError("cannot open '" + path + "'");
        }
        g = parse_edge_list(in);
    }
    std::string hash = hex64(edge_list_hash(g));
    return {std::move(g), std::move(hash)};
}

Json envelope(const std::string& command, const Loaded& in) {
    Json j;
    j["schema"] = kJsonSchema;
    j["command"] = command;
    j["input"] = {{"hash", in.hash}, {"n", in.graph.vertex_count()}, {"m", in.graph.edge_count()}};
    return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_trace(const TraceNode& node, int depth) {
    std::cout << std::string(2 * depth, ' ') << to_string(node.rule) << ' ' << node.key;
    if (node.edge) {
        std::cout << " edge " << node.edge->a << '-' << node.edge->b;
    }
    std::cout << " = " << node.value << '\n';
    for (const auto& child : node.children) {
        print_trace(child, depth + 1);
    }
}

int cmd_kappa(const Config& cfg) {
    const Loaded in = load(cfg.input);
    KappaOptions options;
    options.trace = cfg.trace;
    if (cfg.random_edges) {
        options.edge_choice = EdgeChoice::Random;
        options.seed = cfg.seed;
    }
    const KappaResult r = kappa(in.graph, options);
    if (cfg.json()) {
        Json j = envelope("kappa", in);
        j["kappa"] = r.value;
        j["cache"] = {{"hits", r.cache_stats.hits}, {"misses", r.cache_stats.misses}};
        if (r.trace) {
            j["trace"] = to_json(*r.trace);
        }
        emit(j);
    } else {
        std::cout << r.value << '\n';
        if (r.trace) {
            print_trace(*r.trace, 0);
        }
    }
    return kExitOk;
}

int cmd_alpha(const Config& cfg) {
    const Loaded in = load(cfg.input);
    require_loop_free(in.graph);
    const std::uint64_t brute = enumerate_acyclic(in.graph, cfg.limits()).size();
    const std::int64_t t20 = tutte_eval(in.graph, 2, 0);
    const bool agree = static_cast<std::int64_t>(brute) == t20;
    if (cfg.json()) {
        Json j = envelope("alpha", in);
        j["alpha_bruteforce"] = brute;
        j["tutte_2_0"] = t20;
        j["agree"] = agree;
        emit(j);
    } else {
        std::cout << "bruteforce " << brute << "\nT(2,0) " << t20 << '\n';
        if (!agree) {
            std::cout << "MISMATCH\n";
        }
    }
    return agree ? kExitOk : kExitMismatch;
}

int cmd_tutte(const Config& cfg) {
    const Loaded in = load(cfg.input);
    const TuttePolynomial p = tutte_polynomial(in.graph);
    if (cfg.json()) {
        Json j = envelope("tutte", in);
        j["polynomial"] = p.to_string();
        j["terms"] = to_json(p);
        emit(j);
    } else {
        std::cout << p.to_string() << '\n';
    }
    return kExitOk;
}

int cmd_eval(const Config& cfg) {
    const Loaded in = load(cfg.input);
    const std::int64_t x = cfg.point.first;
    const std::int64_t y = cfg.point.second;
    const std::int64_t value = tutte_eval(in.graph, x, y);
    if (cfg.json()) {
        Json j = envelope("eval", in);
        j["point"] = {x, y};
        j["value"] = value;
        emit(j);
    } else {
        std::cout << value << '\n';
    }
    return kExitOk;
}

int cmd_classes(const Config& cfg) {
    const Loaded in = load(cfg.input);
    const KappaPartition p = kappa_partition_bruteforce(in.graph, cfg.limits());
    if (cfg.json()) {
        Json j = envelope("classes", in);
        j["kappa"] = p.class_count();
        j["alpha"] = p.orientation_count();
        j["classes"] = to_json(p);
        emit(j);
    } else {
        std::cout << "kappa " << p.class_count() << "\nalpha " << p.orientation_count() << '\n';
        for (std::size_t c = 0; c < p.class_count(); ++c) {
            std::cout << "class " << c << " size " << p.members(c).size() << ":";
            for (Mask m : p.members(c)) {
                std::cout << ' ' << Orientation::hex_bits(m);
            }
            std::cout << '\n';
        }
    }
    return kExitOk;
}

int cmd_transversal(const Config& cfg) {
    const Loaded in = load(cfg.input);
    const auto unique = unique_source_orientations(in.graph, cfg.vertex, cfg.limits());
    const KappaPartition p = kappa_partition_bruteforce(in.graph, cfg.limits());
    if (cfg.json()) {
        Json j = envelope("transversal", in);
        j["vertex"] = cfg.vertex;
        j["count"] = unique.size();
        j["kappa"] = p.class_count();
        Json list = Json::array();
        for (const auto& o : unique) {
            list.push_back({{"orientation", Orientation::hex_bits(o.bits())}, {"class", p.class_of(o)}});
        }
        j["orientations"] = std::move(list);
        emit(j);
    } else {
        std::cout << unique.size() << " orientations with unique source " << cfg.vertex << " (kappa "
                  << p.class_count() << ")\n";
        for (const auto& o : unique) {
            std::cout << Orientation::hex_bits(o.bits()) << " class " << p.class_of(o) << '\n';
        }
    }
    return kExitOk;
}

int cmd_collapse(const Config& cfg) {
    const Loaded in = load(cfg.input);
    const CollapseGraph cg = build_collapse_graph(in.graph, cfg.edge, cfg.limits());
    const CollapseReport report = verify_collapse_structure(cg);
    const std::string dot = collapse_to_dot(cg);
    if (cfg.json()) {
        Json j = envelope("collapse", in);
        j["edge"] = cfg.edge;
        j["dot"] = dot;
        j["report"] = to_json(report);
        emit(j);
    } else {
        std::cout << dot;
        std::cout << "# nodes " << report.nodes << ", edges " << report.edges << ", components "
                  << report.components << "\n";
        for (const auto& c : report.checks) {
            std::cout << "# " << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty()) {
                std::cout << ": " << c.detail;
            }
            std::cout << '\n';
        }
    }
    return report.ok() ? kExitOk : kExitMismatch;
}

int cmd_nu(const Config& cfg) {
    const Loaded in = load(cfg.input);
    Json path_json;
    try {
        path_json = Json::parse(cfg.path);
    } catch (const Json::exception& ex) {
        throw InputDomainError(std::string("--path is not valid JSON: ") + ex.what());
    }
    const PathSpec path = path_from_json(in.graph, path_json);
    const KappaPartition p = kappa_partition_bruteforce(in.graph, cfg.limits());
    Json rows = Json::array();
    std::ostringstream text;
    if (cfg.per == "orientation") {
        for (Mask m : p.orientations()) {
            const int nu = nu_path(Orientation(p.graph_ref(), m), path);
            rows.push_back({{"orientation", Orientation::hex_bits(m)}, {"class", p.class_of(m)}, {"nu", nu}});
            text << Orientation::hex_bits(m) << " class " << p.class_of(m) << " nu " << nu << '\n';
        }
    } else {
        for (std::size_t c = 0; c < p.class_count(); ++c) {
            std::set<int> values;
            for (Mask m : p.members(c)) {
                values.insert(nu_path(Orientation(p.graph_ref(), m), path));
            }
            rows.push_back({{"class", c},
                            {"representative", Orientation::hex_bits(p.representative(c))},
                            {"values", std::vector<int>(values.begin(), values.end())}});
            text << "class " << c << " rep " << Orientation::hex_bits(p.representative(c)) << " nu";
            for (int v : values) {
                text << ' ' << v;
            }
            text << '\n';
        }
    }
    if (cfg.json()) {
        Json j = envelope("nu", in);
        j["path"] = {{"vertices", path.vertices}, {"closed", path.closed}, {"edges", path.edge_choice}};
        j["per"] = cfg.per;
        j["rows"] = std::move(rows);
        emit(j);
    } else {
        std::cout << text.str();
    }
    return kExitOk;
}

int cmd_verify(const Config& cfg, bool input_given) {
    std::vector<Multigraph> graphs;
    Json sources = Json::array();
    std::optional<Loaded> in;
    if (input_given || (cfg.corpus.empty() && cfg.random_corpus == 0)) {
        in = load(cfg.input);
        graphs.push_back(in->graph);
        sources.push_back({{"input", in->hash}});
    }
    if (cfg.corpus == "small") {
        const auto small = connected_simple_graphs(5);
        graphs.insert(graphs.end(), small.begin(), small.end());
        sources.push_back({{"corpus", "small"},
                           {"description", "all connected simple labeled graphs on 1..5 vertices"},
                           {"count", small.size()}});
    }
    if (cfg.random_corpus > 0) {
        const ErdosRenyiParams params;
        Rng rng(cfg.seed);
        for (std::size_t i = 0; i < cfg.random_corpus; ++i) {
            graphs.push_back(random_erdos_renyi(rng, params));
        }
        sources.push_back({{"corpus", "random"},
                           {"count", cfg.random_corpus},
                           {"seed", cfg.seed},
                           {"generator", describe(params)}});
    }

    VerifyOptions options;
    options.limits = cfg.limits();
    std::size_t failures = 0;
    Json results = Json::array();
    for (const auto& g : graphs) {
        const GraphVerification v = verify_graph(g, options);
        failures += v.ok() ? 0 : 1;
        if (cfg.json()) {
            results.push_back(to_json(v));
        } else {
            std::cout << (v.ok() ? "ok   " : "FAIL ") << v.graph << " kappa " << v.kappa_bruteforce << " alpha "
                      << v.alpha_bruteforce << '\n';
            for (const auto& c : v.checks) {
                if (!c.passed) {
                    std::cout << "     " << c.name << ": " << c.detail << '\n';
                }
            }
        }
    }
    if (cfg.json()) {
        Json j;
        j["schema"] = kJsonSchema;
        j["command"] = "verify";
        if (in) {
            j["input"] = {{"hash", in->hash}, {"n", in->graph.vertex_count()}, {"m", in->graph.edge_count()}};
        } else {
            j["input"] = nullptr;
        }
        j["seed"] = cfg.seed;
        j["sources"] = std::move(sources);
        j["graphs"] = graphs.size();
        j["failures"] = failures;
        j["results"] = std::move(results);
        emit(j);
    } else {
        std::cout << graphs.size() << " graphs, " << failures << " failures\n";
    }
    return failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Source-to-sink classes of acyclic orientations, the Tutte polynomial and related checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;

    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--cap", cfg.cap, "Largest edge count for brute-force enumeration")
        ->envname("KAPPA_BRUTE_CAP")
        ->check(CLI::Range(std::size_t{1}, kMaxMaskEdges))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for randomized choices")->capture_default_str();

    auto add_input = [&](CLI::App* sub) {
        return sub->add_option("input", cfg.input, "Edge-list file, or - for standard input")->capture_default_str();
    };

    auto* kappa_cmd = app.add_subcommand("kappa", "Class count by deletion/contraction");
    add_input(kappa_cmd);
    kappa_cmd->add_flag("--trace", cfg.trace, "Print the recursion tree");
    kappa_cmd->add_flag("--random-edges", cfg.random_edges, "Pick recursion edges at random (uses --seed)");

    auto* alpha_cmd = app.add_subcommand("alpha", "Acyclic orientation count by enumeration and T(2,0)");
    add_input(alpha_cmd);

    auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial");
    add_input(tutte_cmd);

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate the Tutte polynomial at a point");
    add_input(eval_cmd);
    eval_cmd->add_option("--point", cfg.point, "x y")->required();

    auto* classes_cmd = app.add_subcommand("classes", "Brute-force classes with representatives");
    add_input(classes_cmd);

    auto* transversal_cmd = app.add_subcommand("transversal", "Orientations whose only source is the given vertex");
    add_input(transversal_cmd);
    transversal_cmd->add_option("--vertex", cfg.vertex, "Vertex id")->required();

    auto* collapse_cmd = app.add_subcommand("collapse", "Collapse graph for a cycle-edge (DOT and checks)");
    add_input(collapse_cmd);
    collapse_cmd->add_option("--edge", cfg.edge, "Edge id")->required();

    auto* nu_cmd = app.add_subcommand("nu", "Signed edge count along a path");
    add_input(nu_cmd);
    nu_cmd->add_option("--path", cfg.path, "JSON: [v1,...,vk] or {\"vertices\":[...],\"closed\":true}")->required();
    nu_cmd->add_option("--per", cfg.per, "Report per class or per orientation")
        ->check(CLI::IsMember({"class", "orientation"}))
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check every engine on a graph or corpus");
    auto* verify_input = add_input(verify_cmd);
    verify_cmd->add_option("--corpus", cfg.corpus, "Built-in corpus")->check(CLI::IsMember({"small"}));
    verify_cmd->add_option("--random-corpus", cfg.random_corpus, "Number of seeded random graphs to add");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*kappa_cmd) return cmd_kappa(cfg);
        if (*alpha_cmd) return cmd_alpha(cfg);
        if (*tutte_cmd) return cmd_tutte(cfg);
        if (*eval_cmd) return cmd_eval(cfg);
        if (*classes_cmd) return cmd_classes(cfg);
        if (*transversal_cmd) return cmd_transversal(cfg);
        if (*collapse_cmd) return cmd_collapse(cfg);
        if (*nu_cmd) return cmd_nu(cfg);
        if (*verify_cmd) return cmd_verify(cfg, verify_input->count() > 0);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputDomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitInput;
}
