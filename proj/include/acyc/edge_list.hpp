#pragma once

#include <acyc/errors.hpp>
#include <acyc/graph.hpp>

#include <cstdint>
#include <cstdio>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace acyc {

// Edge-list text format:
//
//   n m
//   u v        (m lines, 0-based; u == v is a loop, repeated lines are parallel edges)
//
// Line order defines edge ids. Blank lines and lines starting with '#' are ignored.

namespace detail {

inline bool parse_uint(const std::string& token, std::uint64_t& out) {
    if (token.empty() || token.size() > 19) {
        return false;
    }
    std::uint64_t v = 0;
    for (char c : token) {
        if (c < '0' || c > '9') {
            return false;
        }
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    out = v;
    return true;
}

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t) {
        tokens.push_back(t);
    }
    return tokens;
}

}  // namespace detail

inline Multigraph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto tokens = detail::split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            continue;
        }
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected two integers, got " + std::to_string(tokens.size()) +
                                          " tokens");
        }
        std::uint64_t first = 0, second = 0;
        if (!detail::parse_uint(tokens[0], first) || !detail::parse_uint(tokens[1], second)) {
            throw ParseError(line_no, "expected two non-negative integers");
        }
        if (!have_header) {
            if (first > std::numeric_limits<Vertex>::max() || second > std::numeric_limits<EdgeId>::max()) {
                throw ParseError(line_no, "graph too large");
            }
            n = first;
            m = second;
            have_header = true;
            edges.reserve(m);
            continue;
        }
        if (edges.size() == m) {
            throw ParseError(line_no, "more edge lines than the declared m = " + std::to_string(m));
        }
        if (first >= n || second >= n) {
            throw ParseError(line_no, "vertex id out of range (n = " + std::to_string(n) + ")");
        }
        edges.emplace_back(static_cast<Vertex>(first), static_cast<Vertex>(second));
    }

    if (!have_header) {
        throw ParseError(line_no + 1, "missing 'n m' header");
    }
    if (edges.size() != m) {
        throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                          std::to_string(edges.size()));
    }
    return Multigraph(n, std::move(edges));
}

inline Multigraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string to_edge_list(const Multigraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
    }
    return out;
}

// 64-bit FNV-1a over the canonical edge-list text; stable across platforms.
inline std::uint64_t edge_list_hash(const Multigraph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_edge_list(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace acyc
