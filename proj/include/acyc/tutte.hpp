#pragma once

#include <acyc/checked.hpp>
#include <acyc/disjoint_sets.hpp>
#include <acyc/errors.hpp>
#include <acyc/graph.hpp>
#include <acyc/graph_key.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace acyc {

// Bivariate polynomial with non-negative integer coefficients, stored as a
// dense table coeffs[i][j] for x^i y^j, trimmed so the last row and column
// are not all zero.
class TuttePolynomial {
public:
    using Coefficient = std::uint64_t;
    using Term = std::array<std::uint64_t, 3>;  // {i, j, coefficient}

    TuttePolynomial() = default;

    static TuttePolynomial monomial(std::size_t i, std::size_t j, Coefficient c = 1) {
        TuttePolynomial p;
        if (c != 0) {
            p.c_.assign(i + 1, std::vector<Coefficient>(j + 1, 0));
            p.c_[i][j] = c;
        }
        return p;
    }

    static TuttePolynomial one() { return monomial(0, 0); }

    bool is_zero() const noexcept { return c_.empty(); }

    std::size_t x_degree() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }
    std::size_t y_degree() const noexcept { return c_.empty() ? 0 : c_.front().size() - 1; }

    Coefficient coefficient(std::size_t i, std::size_t j) const noexcept {
        return i < c_.size() && j < c_[i].size() ? c_[i][j] : 0;
    }

    // Non-zero terms ordered by (i, j) ascending.
    std::vector<Term> terms() const {
        std::vector<Term> out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            for (std::size_t j = 0; j < c_[i].size(); ++j) {
                if (c_[i][j] != 0) {
                    out.push_back({i, j, c_[i][j]});
                }
            }
        }
        return out;
    }

    TuttePolynomial& operator+=(const TuttePolynomial& other) {
        resize(std::max(c_.size(), other.c_.size()), std::max(width(), other.width()));
        for (std::size_t i = 0; i < other.c_.size(); ++i) {
            for (std::size_t j = 0; j < other.c_[i].size(); ++j) {
                c_[i][j] = checked::add(c_[i][j], other.c_[i][j]);
            }
        }
        trim();
        return *this;
    }

    friend TuttePolynomial operator+(TuttePolynomial a, const TuttePolynomial& b) { return a += b; }

    friend TuttePolynomial operator*(const TuttePolynomial& a, const TuttePolynomial& b) {
        TuttePolynomial p;
        if (a.is_zero() || b.is_zero()) {
            return p;
        }
        p.resize(a.c_.size() + b.c_.size() - 1, a.width() + b.width() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < a.c_[i].size(); ++j) {
                if (a.c_[i][j] == 0) {
                    continue;
                }
                for (std::size_t k = 0; k < b.c_.size(); ++k) {
                    for (std::size_t l = 0; l < b.c_[k].size(); ++l) {
                        p.c_[i + k][j + l] = checked::add(p.c_[i + k][j + l], checked::mul(a.c_[i][j], b.c_[k][l]));
                    }
                }
            }
        }
        p.trim();
        return p;
    }

    std::int64_t evaluate(std::int64_t x, std::int64_t y) const {
        std::int64_t total = 0;
        for (const auto& [i, j, c] : terms()) {
            if (c > static_cast<std::uint64_t>(INT64_MAX)) {
                throw ResourceLimitError("Tutte coefficient does not fit a signed 64-bit integer");
            }
            std::int64_t term = static_cast<std::int64_t>(c);
            for (std::uint64_t k = 0; k < i; ++k) {
                term = checked::mul(term, x);
            }
            for (std::uint64_t k = 0; k < j; ++k) {
                term = checked::mul(term, y);
            }
            total = checked::add(total, term);
        }
        return total;
    }

    // "x^2 + x + y": monomials by x-degree, then y-degree, both descending.
    std::string to_string() const {
        auto ts = terms();
        if (ts.empty()) {
            return "0";
        }
        std::sort(ts.begin(), ts.end(), [](const Term& p, const Term& q) {
            return p[0] != q[0] ? p[0] > q[0] : p[1] > q[1];
        });
        std::string s;
        for (const auto& [i, j, c] : ts) {
            if (!s.empty()) {
                s += " + ";
            }
            std::string mono;
            if (i > 0) {
                mono += i == 1 ? "x" : "x^" + std::to_string(i);
            }
            if (j > 0) {
                mono += j == 1 ? "y" : "y^" + std::to_string(j);
            }
            if (mono.empty()) {
                s += std::to_string(c);
            } else {
                s += (c == 1 ? "" : std::to_string(c)) + mono;
            }
        }
        return s;
    }

    friend bool operator==(const TuttePolynomial&, const TuttePolynomial&) = default;

private:
    std::size_t width() const noexcept { return c_.empty() ? 0 : c_.front().size(); }

    void resize(std::size_t rows, std::size_t cols) {
        c_.resize(rows);
        for (auto& row : c_) {
            row.resize(cols, 0);
        }
    }

    void trim() {
        while (!c_.empty() && std::all_of(c_.back().begin(), c_.back().end(), [](Coefficient v) { return v == 0; })) {
            c_.pop_back();
        }
        if (c_.empty()) {
            return;
        }
        std::size_t cols = width();
        while (cols > 0 && std::all_of(c_.begin(), c_.end(), [&](const auto& row) { return row[cols - 1] == 0; })) {
            --cols;
        }
        resize(c_.size(), cols);
    }

    std::vector<std::vector<Coefficient>> c_;
};

inline constexpr std::size_t kDefaultTutteCap = 30;
inline constexpr std::size_t kTutteOracleCap = 16;

struct TutteOptions {
    std::size_t max_edges = kDefaultTutteCap;
    bool memoize = true;
    EdgeChoice edge_choice = EdgeChoice::LexicographicLeast;
    std::uint64_t seed = 0;
};

namespace detail {

// Contracts every bridge; each contributes a factor x. Returns the bridge count.
inline std::size_t contract_bridges(Multigraph& g) {
    std::size_t bridges = 0;
    for (;;) {
        const auto kinds = classify_edges(g);
        auto it = std::find(kinds.begin(), kinds.end(), EdgeKind::Bridge);
        if (it == kinds.end()) {
            return bridges;
        }
        g = contract_edge(g, static_cast<EdgeId>(it - kinds.begin())).graph;
        ++bridges;
    }
}

inline Multigraph without_loops(const Multigraph& g) {
    return filter_edges(g, [&](EdgeId id) { return !g.edge(id).is_loop(); }).graph;
}

}  // namespace detail

// Deletion/contraction on cycle-edges. Loops and bridges are factored out as
// y and x before recursing, which is the base case x^b y^l applied early.
class TutteEngine {
public:
    explicit TutteEngine(TutteOptions options = {}) : options_(options), rng_(options.seed) {}

    TuttePolynomial polynomial(const Multigraph& g) {
        check_cap(g);
        return solve(g);
    }

    // T(g; x, y). The y = 0 path never builds a polynomial and prunes every
    // branch that already carries a loop.
    std::int64_t evaluate(const Multigraph& g, std::int64_t x, std::int64_t y) {
        check_cap(g);
        if (y == 0) {
            return solve_at_y0(g, x);
        }
        return solve(g).evaluate(x, y);
    }

private:
    void check_cap(const Multigraph& g) const {
        if (g.edge_count() > options_.max_edges) {
            throw ResourceLimitError("Tutte cap exceeded: graph has " + std::to_string(g.edge_count()) +
                                     " edges, cap is " + std::to_string(options_.max_edges));
        }
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

    TuttePolynomial solve(const Multigraph& g) {
        const std::size_t loops = g.loop_count();
        Multigraph core = drop_isolated(detail::without_loops(g)).graph;
        const std::size_t bridges = detail::contract_bridges(core);
        core = drop_isolated(core).graph;
        const TuttePolynomial factor = TuttePolynomial::monomial(bridges, loops);
        if (core.edge_count() == 0) {
            return factor;
        }

        const Components comps = connected_components(core);
        if (comps.count() > 1) {
            TuttePolynomial product = factor;
            for (const auto& block : comps.blocks) {
                product = product * solve(induced_subgraph(core, block).graph);
            }
            return product;
        }

        std::string key;
        if (options_.memoize) {
            key = graph_key(core);
            if (auto it = memo_.find(key); it != memo_.end()) {
                return factor * it->second;
            }
        }
        // every edge of core is a cycle-edge now
        const EdgeId e = choose_edge(core);
        TuttePolynomial value = solve(delete_edge(core, e).graph) + solve(contract_edge(core, e).graph);
        if (options_.memoize) {
            memo_.emplace(std::move(key), value);
        }
        return factor * value;
    }

    std::int64_t solve_at_y0(const Multigraph& g, std::int64_t x) {
        if (g.has_loops()) {
            return 0;
        }
        Multigraph core = drop_isolated(g).graph;
        const std::size_t bridges = detail::contract_bridges(core);
        core = drop_isolated(core).graph;
        std::int64_t factor = 1;
        for (std::size_t k = 0; k < bridges; ++k) {
            factor = checked::mul(factor, x);
        }
        if (core.edge_count() == 0 || factor == 0) {
            return factor;
        }

        const Components comps = connected_components(core);
        if (comps.count() > 1) {
            std::int64_t product = factor;
            for (const auto& block : comps.blocks) {
                product = checked::mul(product, solve_at_y0(induced_subgraph(core, block).graph, x));
            }
            return product;
        }

        std::string key;
        if (options_.memoize) {
            key = graph_key(core) + "@x=" + std::to_string(x);
            if (auto it = memo_y0_.find(key); it != memo_y0_.end()) {
                return checked::mul(factor, it->second);
            }
        }
        const EdgeId e = choose_edge(core);
        const std::int64_t value =
            checked::add(solve_at_y0(delete_edge(core, e).graph, x), solve_at_y0(contract_edge(core, e).graph, x));
        if (options_.memoize) {
            memo_y0_.emplace(std::move(key), value);
        }
        return checked::mul(factor, value);
    }

    TutteOptions options_;
    std::mt19937_64 rng_;
    std::unordered_map<std::string, TuttePolynomial> memo_;
    std::unordered_map<std::string, std::int64_t> memo_y0_;
};

inline TuttePolynomial tutte_polynomial(const Multigraph& g, TutteOptions options = {}) {
    return TutteEngine(options).polynomial(g);
}

inline std::int64_t tutte_eval(const Multigraph& g, std::int64_t x, std::int64_t y, TutteOptions options = {}) {
    return TutteEngine(options).evaluate(g, x, y);
}

// Subset expansion: sum over A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)), with the
// rank r(A) = n - (number of components of (V, A)). Independent of the
// deletion/contraction code; used as its oracle.
inline TuttePolynomial tutte_oracle_rank_nullity(const Multigraph& g) {
    const std::size_t m = g.edge_count();
    const std::size_t n = g.vertex_count();
    if (m > kTutteOracleCap) {
        throw ResourceLimitError("subset-expansion oracle cap exceeded: graph has " + std::to_string(m) +
                                 " edges, cap is " + std::to_string(kTutteOracleCap));
    }
    const auto edges = g.edges();
    auto rank = [&](std::uint32_t subset) {
        DisjointSets sets(n);
        for (std::size_t id = 0; id < m; ++id) {
            if ((subset >> id) & 1U) {
                sets.unite(edges[id].a, edges[id].b);
            }
        }
        return n - sets.set_count();
    };

    const std::size_t full_rank = rank(m == 0 ? 0U : static_cast<std::uint32_t>((1ULL << m) - 1));
    // counts[p][q] = number of subsets contributing (x-1)^p (y-1)^q
    std::vector<std::vector<std::int64_t>> counts(m + 1, std::vector<std::int64_t>(m + 1, 0));
    for (std::uint64_t subset = 0; subset < (1ULL << m); ++subset) {
        const auto s = static_cast<std::uint32_t>(subset);
        const std::size_t r = rank(s);
        const auto size = static_cast<std::size_t>(std::popcount(s));
        ++counts[full_rank - r][size - r];
    }

    std::vector<std::vector<std::int64_t>> binom(m + 1, std::vector<std::int64_t>(m + 1, 0));
    for (std::size_t a = 0; a <= m; ++a) {
        binom[a][0] = 1;
        for (std::size_t b = 1; b <= a; ++b) {
            binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
        }
    }
    // (t-1)^p = sum_k C(p,k) t^k (-1)^(p-k)
    std::vector<std::vector<std::int64_t>> signed_coeffs(m + 1, std::vector<std::int64_t>(m + 1, 0));
    for (std::size_t p = 0; p <= m; ++p) {
        for (std::size_t q = 0; q <= m; ++q) {
            if (counts[p][q] == 0) {
                continue;
            }
            for (std::size_t i = 0; i <= p; ++i) {
                for (std::size_t j = 0; j <= q; ++j) {
                    const std::int64_t sign = ((p - i) + (q - j)) % 2 == 0 ? 1 : -1;
                    signed_coeffs[i][j] += sign * counts[p][q] * binom[p][i] * binom[q][j];
                }
            }
        }
    }

    TuttePolynomial result;
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= m; ++j) {
            if (signed_coeffs[i][j] < 0) {
                throw InternalInvariantError("subset expansion produced a negative Tutte coefficient");
            }
            if (signed_coeffs[i][j] > 0) {
                result += TuttePolynomial::monomial(i, j, static_cast<std::uint64_t>(signed_coeffs[i][j]));
            }
        }
    }
    return result;
}

}  // namespace acyc
