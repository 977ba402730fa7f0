#pragma once

#include <acyc/disjoint_sets.hpp>
#include <acyc/edge_list.hpp>
#include <acyc/errors.hpp>
#include <acyc/graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace acyc {

// One bit per edge-id. Bit clear: edge runs from its smaller endpoint label to
// the larger one. Bit set: the reverse.
using Mask = std::uint64_t;

using GraphRef = std::shared_ptr<const Multigraph>;

inline constexpr std::size_t kDefaultBruteForceCap = 20;
inline constexpr std::size_t kMaxMaskEdges = 63;

struct BruteForceLimits {
    std::size_t max_edges = kDefaultBruteForceCap;
};

inline void check_brute_force_cap(const Multigraph& g, const BruteForceLimits& limits) {
    const std::size_t cap = std::min(limits.max_edges, kMaxMaskEdges);
    if (g.edge_count() > cap) {
        throw ResourceLimitError("brute-force cap exceeded: graph has " + std::to_string(g.edge_count()) +
                                 " edges, cap is " + std::to_string(cap));
    }
}

inline void require_loop_free(const Multigraph& g) {
    if (g.has_loops()) {
        throw InputDomainError("graph has a loop; loops admit no acyclic orientation");
    }
}

namespace detail {

inline Mask low_bits(std::size_t m) { return m >= 64 ? ~Mask{0} : (Mask{1} << m) - 1; }

// Per-vertex edge masks for O(1) source tests on an orientation bitmask.
class OrientationSpace {
public:
    explicit OrientationSpace(const Multigraph& g)
        : n_(g.vertex_count()), m_(g.edge_count()), at_a_(n_, 0), at_b_(n_, 0) {
        require_loop_free(g);
        if (m_ > kMaxMaskEdges) {
            throw ResourceLimitError("orientation bitmasks support at most " + std::to_string(kMaxMaskEdges) +
                                     " edges");
        }
        const auto edges = g.edges();
        for (EdgeId id = 0; id < m_; ++id) {
            at_a_[edges[id].a] |= Mask{1} << id;
            at_b_[edges[id].b] |= Mask{1} << id;
        }
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return m_; }
    Mask all_edges() const noexcept { return low_bits(m_); }

    Mask incident(Vertex v) const noexcept { return at_a_[v] | at_b_[v]; }
    Mask in_edges(Vertex v, Mask o) const noexcept { return (at_b_[v] & ~o) | (at_a_[v] & o); }
    Mask out_edges(Vertex v, Mask o) const noexcept { return (at_a_[v] & ~o) | (at_b_[v] & o); }

    bool is_source(Vertex v, Mask o) const noexcept { return in_edges(v, o) == 0; }
    bool is_clickable(Vertex v, Mask o) const noexcept { return incident(v) != 0 && in_edges(v, o) == 0; }

    // Peels off sources until no edge remains (acyclic) or no source exists.
    bool is_acyclic(Mask o) const {
        Mask remaining = all_edges();
        std::vector<char> alive(n_, 1);
        while (remaining != 0) {
            bool progress = false;
            for (Vertex v = 0; v < n_; ++v) {
                if (alive[v] && (incident(v) & remaining) != 0 && (in_edges(v, o) & remaining) == 0) {
                    remaining &= ~incident(v);
                    alive[v] = 0;
                    progress = true;
                }
            }
            if (!progress) {
                return false;
            }
        }
        return true;
    }

    std::vector<Mask> acyclic_masks() const {
        std::vector<Mask> out;
        const Mask end = Mask{1} << m_;
        for (Mask o = 0; o < end; ++o) {
            if (is_acyclic(o)) {
                out.push_back(o);
            }
        }
        return out;
    }

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<Mask> at_a_;
    std::vector<Mask> at_b_;
};

inline bool same_graph(const GraphRef& x, const GraphRef& y) { return x == y || *x == *y; }

}  // namespace detail

// An assignment of a direction to every edge of a graph. Shares ownership of
// the graph so that orientations can outlive the value they were built from.
class Orientation {
public:
    Orientation(GraphRef graph, Mask bits) : graph_(std::move(graph)), bits_(bits) {
        if (graph_->edge_count() > kMaxMaskEdges) {
            throw ResourceLimitError("orientation bitmasks support at most " + std::to_string(kMaxMaskEdges) +
                                     " edges");
        }
        if ((bits_ & ~detail::low_bits(graph_->edge_count())) != 0) {
            throw InputDomainError("orientation has bits beyond the graph's edge count");
        }
    }

    Orientation(const Multigraph& graph, Mask bits)
        : Orientation(std::make_shared<const Multigraph>(graph), bits) {}

    const Multigraph& graph() const noexcept { return *graph_; }
    const GraphRef& graph_ref() const noexcept { return graph_; }
    Mask bits() const noexcept { return bits_; }

    bool reversed(EdgeId e) const { return ((bits_ >> e) & 1U) != 0; }

    Vertex tail(EdgeId e) const {
        const Edge& edge = graph_->edge(e);
        return reversed(e) ? edge.b : edge.a;
    }

    Vertex head(EdgeId e) const {
        const Edge& edge = graph_->edge(e);
        return reversed(e) ? edge.a : edge.b;
    }

    // "<hex bits>@<graph hash>"
    std::string to_string() const { return hex_bits(bits_) + "@" + hex64(edge_list_hash(*graph_)); }

    static std::string hex_bits(Mask bits) {
        static constexpr char digits[] = "0123456789abcdef";
        if (bits == 0) {
            return "0";
        }
        std::string s;
        while (bits != 0) {
            s.insert(s.begin(), digits[bits & 0xF]);
            bits >>= 4;
        }
        return s;
    }

    friend bool operator==(const Orientation& x, const Orientation& y) {
        return x.bits_ == y.bits_ && detail::same_graph(x.graph_, y.graph_);
    }

private:
    GraphRef graph_;
    Mask bits_;
};

// Parses the output of Orientation::to_string; the hash must match `g`.
inline Orientation parse_orientation(const Multigraph& g, const std::string& text) {
    const auto at = text.find('@');
    const std::string hex = text.substr(0, at);
    if (hex.empty() || hex.size() > 16) {
        throw InputDomainError("malformed orientation '" + text + "'");
    }
    Mask bits = 0;
    for (char c : hex) {
        bits <<= 4;
        if (c >= '0' && c <= '9') {
            bits |= static_cast<Mask>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            bits |= static_cast<Mask>(c - 'a' + 10);
        } else {
            throw InputDomainError("malformed orientation '" + text + "'");
        }
    }
    if (at != std::string::npos && text.substr(at + 1) != hex64(edge_list_hash(g))) {
        throw InputDomainError("orientation '" + text + "' belongs to a different graph");
    }
    return Orientation(g, bits);
}

inline bool is_acyclic(const Orientation& o) {
    return detail::OrientationSpace(o.graph()).is_acyclic(o.bits());
}

// Vertices without incoming edges (isolated vertices count).
inline std::vector<Vertex> sources(const Orientation& o) {
    const detail::OrientationSpace space(o.graph());
    std::vector<Vertex> out;
    for (Vertex v = 0; v < space.vertex_count(); ++v) {
        if (space.is_source(v, o.bits())) {
            out.push_back(v);
        }
    }
    return out;
}

// Acyc(Y) in ascending bitmask order.
inline std::vector<Orientation> enumerate_acyclic(const Multigraph& g, const BruteForceLimits& limits = {}) {
    check_brute_force_cap(g, limits);
    const detail::OrientationSpace space(g);
    const auto ref = std::make_shared<const Multigraph>(g);
    std::vector<Orientation> out;
    for (Mask o : space.acyclic_masks()) {
        out.emplace_back(ref, o);
    }
    return out;
}

// Source-to-sink conversion at v.
inline Orientation click(const Orientation& o, Vertex v) {
    if (v >= o.graph().vertex_count()) {
        throw InputDomainError("vertex " + std::to_string(v) + " out of range");
    }
    const detail::OrientationSpace space(o.graph());
    if (space.incident(v) == 0) {
        throw PreconditionError("vertex " + std::to_string(v) + " is isolated");
    }
    if (!space.is_source(v, o.bits())) {
        throw PreconditionError("vertex " + std::to_string(v) + " is not a source");
    }
    return Orientation(o.graph_ref(), o.bits() ^ space.incident(v));
}

inline Orientation apply_click_sequence(const Orientation& o, std::span<const Vertex> sequence) {
    const detail::OrientationSpace space(o.graph());
    Mask bits = o.bits();
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        const Vertex v = sequence[i];
        if (v >= space.vertex_count()) {
            throw ClickSequenceError(i, "vertex " + std::to_string(v) + " out of range");
        }
        if (!space.is_clickable(v, bits)) {
            throw ClickSequenceError(i, "vertex " + std::to_string(v) + " is not a source of degree >= 1");
        }
        bits ^= space.incident(v);
    }
    return Orientation(o.graph_ref(), bits);
}

// Partition of Acyc(Y) into classes. Classes are ordered by their least
// member; members are ascending, so members(c).front() is the representative.
class OrientationPartition {
public:
    OrientationPartition(GraphRef graph, std::vector<Mask> sorted_masks, DisjointSets& sets)
        : graph_(std::move(graph)), masks_(std::move(sorted_masks)), class_index_(masks_.size()) {
        std::vector<std::size_t> class_of_root(masks_.size(), SIZE_MAX);
        for (std::size_t i = 0; i < masks_.size(); ++i) {
            const std::size_t root = sets.find(i);
            if (class_of_root[root] == SIZE_MAX) {
                class_of_root[root] = classes_.size();
                classes_.emplace_back();
            }
            class_index_[i] = class_of_root[root];
            classes_[class_index_[i]].push_back(masks_[i]);
        }
    }

    const Multigraph& graph() const noexcept { return *graph_; }
    const GraphRef& graph_ref() const noexcept { return graph_; }

    std::size_t class_count() const noexcept { return classes_.size(); }
    std::size_t orientation_count() const noexcept { return masks_.size(); }

    std::span<const Mask> members(std::size_t c) const { return classes_.at(c); }
    Mask representative(std::size_t c) const { return classes_.at(c).front(); }
    Orientation representative_orientation(std::size_t c) const { return {graph_, representative(c)}; }

    // All acyclic orientations, ascending.
    std::span<const Mask> orientations() const noexcept { return masks_; }

    std::optional<std::size_t> find_class(Mask o) const {
        auto it = std::lower_bound(masks_.begin(), masks_.end(), o);
        if (it == masks_.end() || *it != o) {
            return std::nullopt;
        }
        return class_index_[static_cast<std::size_t>(it - masks_.begin())];
    }

    std::size_t class_of(Mask o) const {
        if (auto c = find_class(o)) {
            return *c;
        }
        throw InputDomainError("orientation " + Orientation::hex_bits(o) + " is not acyclic");
    }

    std::size_t class_of(const Orientation& o) const {
        if (!detail::same_graph(o.graph_ref(), graph_)) {
            throw InputDomainError("orientation belongs to a different graph");
        }
        return class_of(o.bits());
    }

    const std::vector<std::vector<Mask>>& classes() const noexcept { return classes_; }

    friend bool operator==(const OrientationPartition& x, const OrientationPartition& y) {
        return *x.graph_ == *y.graph_ && x.classes_ == y.classes_;
    }

private:
    GraphRef graph_;
    std::vector<Mask> masks_;
    std::vector<std::size_t> class_index_;
    std::vector<std::vector<Mask>> classes_;
};

using KappaPartition = OrientationPartition;

// Connected components of the click graph on Acyc(g). Works on the graph as
// given: parallel edges are kept, and anti-parallel pairs count as cycles.
inline KappaPartition kappa_partition_bruteforce(const Multigraph& g, const BruteForceLimits& limits = {}) {
    check_brute_force_cap(g, limits);
    const detail::OrientationSpace space(g);
    std::vector<Mask> masks = space.acyclic_masks();
    DisjointSets sets(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) {
        for (Vertex v = 0; v < space.vertex_count(); ++v) {
            if (!space.is_clickable(v, masks[i])) {
                continue;
            }
            const Mask next = masks[i] ^ space.incident(v);
            auto it = std::lower_bound(masks.begin(), masks.end(), next);
            if (it == masks.end() || *it != next) {
                throw InternalInvariantError("click produced a cyclic orientation");
            }
            sets.unite(i, static_cast<std::size_t>(it - masks.begin()));
        }
    }
    return KappaPartition(std::make_shared<const Multigraph>(g), std::move(masks), sets);
}

// ---------------------------------------------------------------------------
// Cut-equivalence

inline bool cut_equivalent(const Orientation& o1, const Orientation& o2) {
    if (!detail::same_graph(o1.graph_ref(), o2.graph_ref())) {
        throw InputDomainError("cut_equivalent: orientations belong to different graphs");
    }
    const Multigraph& g = o1.graph();
    const detail::OrientationSpace space(g);
    if (!space.is_acyclic(o1.bits()) || !space.is_acyclic(o2.bits())) {
        throw PreconditionError("cut_equivalent: both orientations must be acyclic");
    }
    const Mask diff = o1.bits() ^ o2.bits();
    if (diff == 0) {
        return true;
    }

    // Sides are unions of components of the graph without the disagreement edges.
    DisjointSets blocks(g.vertex_count());
    const auto edges = g.edges();
    for (EdgeId id = 0; id < edges.size(); ++id) {
        if (((diff >> id) & 1U) == 0) {
            blocks.unite(edges[id].a, edges[id].b);
        }
    }
    // Every disagreement edge must run from a tail block to a head block in o1.
    enum Side : char { Free, Tail, Head };
    std::vector<Side> side(g.vertex_count(), Free);
    for (EdgeId id = 0; id < edges.size(); ++id) {
        if (((diff >> id) & 1U) == 0) {
            continue;
        }
        const std::size_t t = blocks.find(o1.tail(id));
        const std::size_t h = blocks.find(o1.head(id));
        if (t == h || side[t] == Head || side[h] == Tail) {
            return false;
        }
        side[t] = Tail;
        side[h] = Head;
    }
    return true;
}

// Transitive closure of cut_equivalent over Acyc(g). Candidates are generated
// from vertex bipartitions (every cut is the boundary of one) and confirmed
// with cut_equivalent; graphs with more than 20 vertices fall back to all pairs.
inline OrientationPartition cut_equivalence_partition(const Multigraph& g, const BruteForceLimits& limits = {}) {
    check_brute_force_cap(g, limits);
    const detail::OrientationSpace space(g);
    const auto ref = std::make_shared<const Multigraph>(g);
    std::vector<Mask> masks = space.acyclic_masks();
    DisjointSets sets(masks.size());
    const std::size_t n = g.vertex_count();

    auto index_of = [&](Mask o) -> std::optional<std::size_t> {
        auto it = std::lower_bound(masks.begin(), masks.end(), o);
        if (it == masks.end() || *it != o) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - masks.begin());
    };

    if (n <= 20) {
        std::vector<Mask> cut_masks;
        for (std::uint32_t side = 1; side + 1 < (1U << n); ++side) {
            Mask boundary = 0;
            const auto edges = g.edges();
            for (EdgeId id = 0; id < edges.size(); ++id) {
                if (((side >> edges[id].a) & 1U) != ((side >> edges[id].b) & 1U)) {
                    boundary |= Mask{1} << id;
                }
            }
            if (boundary != 0) {
                cut_masks.push_back(boundary);
            }
        }
        std::sort(cut_masks.begin(), cut_masks.end());
        cut_masks.erase(std::unique(cut_masks.begin(), cut_masks.end()), cut_masks.end());
        for (std::size_t i = 0; i < masks.size(); ++i) {
            const Orientation o1(ref, masks[i]);
            for (Mask cut : cut_masks) {
                const auto j = index_of(masks[i] ^ cut);
                if (j && !sets.same(i, *j) && cut_equivalent(o1, Orientation(ref, masks[*j]))) {
                    sets.unite(i, *j);
                }
            }
        }
    } else {
        for (std::size_t i = 0; i < masks.size(); ++i) {
            for (std::size_t j = i + 1; j < masks.size(); ++j) {
                if (!sets.same(i, j) && cut_equivalent(Orientation(ref, masks[i]), Orientation(ref, masks[j]))) {
                    sets.unite(i, j);
                }
            }
        }
    }
    return OrientationPartition(ref, std::move(masks), sets);
}

// ---------------------------------------------------------------------------
// Unique-source orientations and the normalization map onto them

inline bool has_unique_source(const Orientation& o, Vertex v) {
    const auto s = sources(o);
    return s.size() == 1 && s.front() == v;
}

// Acyc_v(g): acyclic orientations whose only source is v. Requires g connected.
inline std::vector<Orientation> unique_source_orientations(const Multigraph& g, Vertex v,
                                                           const BruteForceLimits& limits = {}) {
    if (v >= g.vertex_count()) {
        throw InputDomainError("vertex " + std::to_string(v) + " out of range");
    }
    if (!is_connected(g)) {
        throw InputDomainError("unique-source orientations require a connected graph");
    }
    check_brute_force_cap(g, limits);
    const detail::OrientationSpace space(g);
    const auto ref = std::make_shared<const Multigraph>(g);
    std::vector<Orientation> out;
    for (Mask o : space.acyclic_masks()) {
        bool only_v = space.is_source(v, o);
        for (Vertex u = 0; only_v && u < space.vertex_count(); ++u) {
            only_v = u == v || !space.is_source(u, o);
        }
        if (only_v) {
            out.emplace_back(ref, o);
        }
    }
    return out;
}

struct NormalizedOrientation {
    Orientation orientation;
    std::vector<Vertex> clicks;
};

// Clicks the smallest-labeled source other than v until v is the only source.
inline NormalizedOrientation normalize_to_unique_source(const Orientation& o, Vertex v) {
    const Multigraph& g = o.graph();
    if (v >= g.vertex_count()) {
        throw InputDomainError("vertex " + std::to_string(v) + " out of range");
    }
    if (!is_connected(g)) {
        throw InputDomainError("normalize_to_unique_source requires a connected graph");
    }
    const detail::OrientationSpace space(g);
    if (!space.is_acyclic(o.bits())) {
        throw PreconditionError("normalize_to_unique_source: orientation is not acyclic");
    }
    const std::size_t m = std::min<std::size_t>(g.edge_count(), 48);
    const std::uint64_t guard = (std::uint64_t{1} << m) * std::max<std::uint64_t>(g.vertex_count(), 1);

    Mask bits = o.bits();
    std::vector<Vertex> clicks;
    for (std::uint64_t iter = 0;; ++iter) {
        if (iter > guard) {
            throw InternalInvariantError("normalize_to_unique_source did not terminate");
        }
        std::optional<Vertex> next;
        for (Vertex u = 0; u < space.vertex_count(); ++u) {
            if (u != v && space.is_clickable(u, bits)) {
                next = u;
                break;
            }
        }
        if (!next) {
            break;
        }
        bits ^= space.incident(*next);
        clicks.push_back(*next);
    }
    return {Orientation(o.graph_ref(), bits), std::move(clicks)};
}

// Orients every edge from the earlier to the later vertex of `perm`.
inline Orientation orientation_from_permutation(const Multigraph& g, std::span<const Vertex> perm) {
    const std::size_t n = g.vertex_count();
    if (perm.size() != n) {
        throw InputDomainError("permutation has " + std::to_string(perm.size()) + " entries, graph has " +
                               std::to_string(n) + " vertices");
    }
    std::vector<std::size_t> position(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || position[perm[i]] != SIZE_MAX) {
            throw InputDomainError("not a permutation of the vertex set");
        }
        position[perm[i]] = i;
    }
    require_loop_free(g);
    Mask bits = 0;
    const auto edges = g.edges();
    for (EdgeId id = 0; id < edges.size(); ++id) {
        if (position[edges[id].a] > position[edges[id].b]) {
            bits |= Mask{1} << id;
        }
    }
    return Orientation(g, bits);
}

// ---------------------------------------------------------------------------
// Paths and the signed edge count along them

// A simple path (v1, ..., vk). A closed path repeats v1 at the end. edge_choice[i]
// is the edge joining vertices[i] and vertices[i+1].
struct PathSpec {
    std::vector<Vertex> vertices;
    bool closed = false;
    std::vector<EdgeId> edge_choice;
};

inline void validate_path(const Multigraph& g, const PathSpec& p) {
    const auto fail = [](const std::string& why) { throw InputDomainError("invalid path: " + why); };
    if (p.vertices.empty()) {
        fail("no vertices");
    }
    if (p.edge_choice.size() + 1 != p.vertices.size()) {
        fail("edge_choice must have one entry per consecutive vertex pair");
    }
    for (Vertex v : p.vertices) {
        if (v >= g.vertex_count()) {
            fail("vertex " + std::to_string(v) + " out of range");
        }
    }
    std::vector<Vertex> distinct(p.vertices.begin(), p.vertices.end());
    if (p.closed) {
        if (p.vertices.size() < 3 || p.vertices.front() != p.vertices.back()) {
            fail("a closed path lists its first vertex again at the end and has at least two edges");
        }
        distinct.pop_back();
    }
    std::sort(distinct.begin(), distinct.end());
    if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end()) {
        fail("repeated vertex");
    }
    std::vector<EdgeId> used(p.edge_choice.begin(), p.edge_choice.end());
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end()) {
        fail("repeated edge");
    }
    for (std::size_t i = 0; i < p.edge_choice.size(); ++i) {
        if (p.edge_choice[i] >= g.edge_count()) {
            fail("edge id " + std::to_string(p.edge_choice[i]) + " out of range");
        }
        if (g.edge(p.edge_choice[i]) != Edge(p.vertices[i], p.vertices[i + 1]) ||
            g.edge(p.edge_choice[i]).is_loop()) {
            fail("edge " + std::to_string(p.edge_choice[i]) + " does not join " + std::to_string(p.vertices[i]) +
                 " and " + std::to_string(p.vertices[i + 1]));
        }
    }
}

// Builds a PathSpec, picking the lowest unused edge-id for each step. For a
// closed path the first vertex is appended if it is not already repeated.
inline PathSpec make_path(const Multigraph& g, std::vector<Vertex> vertices, bool closed) {
    if (closed && !vertices.empty() && (vertices.size() == 1 || vertices.front() != vertices.back())) {
        vertices.push_back(vertices.front());
    }
    PathSpec p{std::move(vertices), closed, {}};
    std::vector<bool> used(g.edge_count(), false);
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        const Edge want(p.vertices[i], p.vertices[i + 1]);
        std::optional<EdgeId> pick;
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            if (!used[id] && g.edge(id) == want && !want.is_loop()) {
                pick = id;
                break;
            }
        }
        if (!pick) {
            throw InputDomainError("invalid path: no unused edge joins " + std::to_string(want.a) + " and " +
                                   std::to_string(want.b));
        }
        used[*pick] = true;
        p.edge_choice.push_back(*pick);
    }
    validate_path(g, p);
    return p;
}

// Edges traversed forward minus edges traversed backward.
inline int nu_path(const Orientation& o, const PathSpec& p) {
    validate_path(o.graph(), p);
    int value = 0;
    for (std::size_t i = 0; i < p.edge_choice.size(); ++i) {
        value += o.tail(p.edge_choice[i]) == p.vertices[i] ? 1 : -1;
    }
    return value;
}

// Every simple cycle of g once (as a closed path starting at its smallest
// vertex), ordered by its sorted edge-id set.
inline std::vector<PathSpec> enumerate_simple_cycles(const Multigraph& g) {
    const Adjacency adj = adjacency(g);
    std::set<std::vector<EdgeId>> seen;
    std::vector<PathSpec> out;
    std::vector<Vertex> path;
    std::vector<EdgeId> path_edges;
    std::vector<bool> on_path(g.vertex_count(), false);

    auto record = [&](EdgeId closing) {
        std::vector<EdgeId> key = path_edges;
        key.push_back(closing);
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) {
            return;
        }
        PathSpec p;
        p.vertices = path;
        p.vertices.push_back(path.front());
        p.closed = true;
        p.edge_choice = path_edges;
        p.edge_choice.push_back(closing);
        out.push_back(std::move(p));
    };

    auto dfs = [&](auto&& self, Vertex v, Vertex start) -> void {
        for (auto [w, id] : adj[v]) {
            if (w == v || (!path_edges.empty() && id == path_edges.back())) {
                continue;
            }
            if (w == start && !path_edges.empty()) {
                record(id);
            } else if (w > start && !on_path[w]) {
                on_path[w] = true;
                path.push_back(w);
                path_edges.push_back(id);
                self(self, w, start);
                path.pop_back();
                path_edges.pop_back();
                on_path[w] = false;
            }
        }
    };

    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        path = {s};
        on_path[s] = true;
        dfs(dfs, s, s);
        on_path[s] = false;
    }

    std::vector<std::pair<std::vector<EdgeId>, PathSpec>> keyed;
    for (auto& p : out) {
        std::vector<EdgeId> key = p.edge_choice;
        std::sort(key.begin(), key.end());
        keyed.emplace_back(std::move(key), std::move(p));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    out.clear();
    for (auto& [key, p] : keyed) {
        out.push_back(std::move(p));
    }
    return out;
}

// A simple closed path that traverses cycle-edge e from its smaller endpoint
// to its larger one and returns through a shortest path in g - e.
inline PathSpec closed_path_through(const Multigraph& g, EdgeId e) {
    const Edge target = g.edge(e);
    if (target.is_loop()) {
        throw InputDomainError("edge " + std::to_string(e) + " is a loop");
    }
    const Adjacency adj = adjacency(g);
    std::vector<std::optional<std::pair<Vertex, EdgeId>>> parent(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> queue{target.b};
    seen[target.b] = true;
    for (std::size_t head = 0; head < queue.size() && !seen[target.a]; ++head) {
        const Vertex v = queue[head];
        for (auto [w, id] : adj[v]) {
            if (id == e || seen[w]) {
                continue;
            }
            seen[w] = true;
            parent[w] = {v, id};
            queue.push_back(w);
        }
    }
    if (!seen[target.a]) {
        throw InputDomainError("edge " + std::to_string(e) + " is a bridge; no closed path runs through it");
    }
    PathSpec p;
    p.closed = true;
    p.vertices = {target.a, target.b};
    p.edge_choice = {e};
    // walk back from a to b, then reverse that tail so the path continues from b
    std::vector<Vertex> back_vertices;
    std::vector<EdgeId> back_edges;
    for (Vertex v = target.a; v != target.b; v = parent[v]->first) {
        back_vertices.push_back(parent[v]->first);
        back_edges.push_back(parent[v]->second);
    }
    // back_vertices runs from a's parent toward b; we need b -> ... -> a
    std::reverse(back_vertices.begin(), back_vertices.end());
    std::reverse(back_edges.begin(), back_edges.end());
    for (std::size_t i = 1; i < back_vertices.size(); ++i) {
        p.vertices.push_back(back_vertices[i]);
    }
    p.vertices.push_back(target.a);
    for (EdgeId id : back_edges) {
        p.edge_choice.push_back(id);
    }
    validate_path(g, p);
    return p;
}

}  // namespace acyc
