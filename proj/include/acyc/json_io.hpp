#pragma once

// JSON views of the library's results (nlohmann::ordered_json keeps key order
// stable, which the CLI relies on for byte-identical reports).

#include <acyc/collapse.hpp>
#include <acyc/edge_list.hpp>
#include <acyc/kappa.hpp>
#include <acyc/orientation.hpp>
#include <acyc/tutte.hpp>
#include <acyc/verify.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace acyc {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

inline Json to_json(const TraceNode& node) {
    Json j;
    j["key"] = node.key;
    j["rule"] = to_string(node.rule);
    j["edge"] = node.edge ? Json::array({node.edge->a, node.edge->b}) : Json(nullptr);
    j["children"] = Json::array();
    for (const auto& child : node.children) {
        j["children"].push_back(to_json(child));
    }
    j["value"] = node.value;
    return j;
}

inline TraceNode trace_from_json(const Json& j) {
    TraceNode node;
    node.key = j.at("key").get<std::string>();
    const auto rule = j.at("rule").get<std::string>();
    for (KappaRule r : {KappaRule::Base, KappaRule::Product, KappaRule::BridgePrune, KappaRule::Recursion}) {
        if (rule == to_string(r)) {
            node.rule = r;
        }
    }
    if (!j.at("edge").is_null()) {
        node.edge = Edge(j["edge"][0].get<Vertex>(), j["edge"][1].get<Vertex>());
    }
    for (const auto& child : j.at("children")) {
        node.children.push_back(trace_from_json(child));
    }
    node.value = j.at("value").get<std::uint64_t>();
    return node;
}

// [[i, j, c], ...] for c x^i y^j, ascending (i, j).
inline Json to_json(const TuttePolynomial& p) {
    Json terms = Json::array();
    for (const auto& [i, j, c] : p.terms()) {
        terms.push_back(Json::array({i, j, c}));
    }
    return terms;
}

inline TuttePolynomial polynomial_from_json(const Json& terms) {
    TuttePolynomial p;
    for (const auto& t : terms) {
        p += TuttePolynomial::monomial(t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>(),
                                       t.at(2).get<std::uint64_t>());
    }
    return p;
}

inline Json to_json(const OrientationPartition& partition) {
    Json classes = Json::array();
    for (std::size_t c = 0; c < partition.class_count(); ++c) {
        Json members = Json::array();
        for (Mask o : partition.members(c)) {
            members.push_back(Orientation::hex_bits(o));
        }
        classes.push_back({{"representative", Orientation::hex_bits(partition.representative(c))},
                           {"size", partition.members(c).size()},
                           {"members", std::move(members)}});
    }
    return classes;
}

inline Json to_json(const CollapseReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"nodes", report.nodes},
            {"edges", report.edges},
            {"components", report.components},
            {"kappa_deleted", report.kappa_deleted},
            {"kappa_contracted", report.kappa_contracted},
            {"ok", report.ok()},
            {"checks", std::move(checks)}};
}

inline Json to_json(const GraphVerification& v) {
    Json checks = Json::array();
    for (const auto& c : v.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"graph", v.graph},
            {"hash", v.hash},
            {"n", v.vertices},
            {"m", v.edges},
            {"connected", v.connected},
            {"kappa_bruteforce", v.kappa_bruteforce},
            {"kappa_recursion", v.kappa_recursion},
            {"tutte_1_0", v.tutte_1_0},
            {"alpha_bruteforce", v.alpha_bruteforce},
            {"tutte_2_0", v.tutte_2_0},
            {"ok", v.ok()},
            {"checks", std::move(checks)}};
}

// Accepts [v1, ..., vk] or {"vertices": [...], "closed": bool, "edges": [...]}.
// A bare array is closed when its first and last entries coincide.
inline PathSpec path_from_json(const Multigraph& g, const Json& j) {
    try {
        if (j.is_array()) {
            auto vertices = j.get<std::vector<Vertex>>();
            const bool closed = vertices.size() > 2 && vertices.front() == vertices.back();
            return make_path(g, std::move(vertices), closed);
        }
        auto vertices = j.at("vertices").get<std::vector<Vertex>>();
        const bool closed = j.value("closed", false);
        if (!j.contains("edges")) {
            return make_path(g, std::move(vertices), closed);
        }
        if (closed && !vertices.empty() && vertices.front() != vertices.back()) {
            vertices.push_back(vertices.front());
        }
        PathSpec p{std::move(vertices), closed, j.at("edges").get<std::vector<EdgeId>>()};
        validate_path(g, p);
        return p;
    } catch (const Json::exception& ex) {
        throw InputDomainError(std::string("invalid path JSON: ") + ex.what());
    }
}

}  // namespace acyc
