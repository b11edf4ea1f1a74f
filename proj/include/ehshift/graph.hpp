#ifndef EHSHIFT_GRAPH_HPP
#define EHSHIFT_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ehshift {

/// Undirected simple graph over vertex indices 0..n-1. Adjacency is kept
/// as bitset rows so the exact solvers can intersect neighborhoods with
/// word operations. Immutable by convention once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * words_, 0) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        if (!adjacent(u, v)) ++edges_;
        row(u)[v / 64] |= 1ULL << (v % 64);
        row(v)[u / 64] |= 1ULL << (u % 64);
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (row(u)[v / 64] >> (v % 64)) & 1ULL;
    }

    std::size_t edge_count() const { return edges_; }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
        return d;
    }

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edges_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    void set_label(int v, std::string label) {
        check_vertex(v);
        if (labels_.empty()) labels_.resize(n_);
        for (int u = 0; u < n_; ++u)
            if (u != v && labels_[u] == label && !label.empty())
                throw std::invalid_argument("Graph: duplicate vertex label '" + label + "'");
        labels_[v] = std::move(label);
    }

    bool has_labels() const { return !labels_.empty(); }

    std::string label(int v) const {
        check_vertex(v);
        if (labels_.empty() || labels_[v].empty()) return std::to_string(v);
        return labels_[v];
    }

    /// Raw bitset row for solver internals.
    const std::uint64_t* neighbor_bits(int v) const { return row(v); }
    int word_count() const { return words_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex index out of range");
    }
    std::uint64_t* row(int v) { return adj_.data() + static_cast<std::size_t>(v) * words_; }
    const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }

    int n_ = 0;
    int words_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::string> labels_;
};

/// Injective, edge-preserving map from pattern vertices into a host.
struct VertexMapping {
    std::vector<int> to_host; // to_host[p] = host vertex of pattern vertex p
};

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline bool is_triangle_free(const Graph& g) {
    const int w = g.word_count();
    for (int u = 0; u < g.vertex_count(); ++u) {
        const std::uint64_t* ru = g.neighbor_bits(u);
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.adjacent(u, v)) continue;
            const std::uint64_t* rv = g.neighbor_bits(v);
            for (int i = 0; i < w; ++i)
                if (ru[i] & rv[i]) return false;
        }
    }
    return true;
}

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline int popcount_all(const Bits& b) {
    int c = 0;
    for (std::uint64_t w : b) c += std::popcount(w);
    return c;
}

inline void clique_expand(const Graph& g, Bits& cand, int size, int& best) {
    int remaining = popcount_all(cand);
    if (size + remaining <= best) return;
    if (remaining == 0) {
        best = std::max(best, size);
        return;
    }
    const int w = g.word_count();
    // Iterate candidates in ascending index order; each either joins the
    // clique or is discarded.
    Bits local = cand;
    for (int i = 0; i < w; ++i) {
        while (local[i]) {
            if (size + popcount_all(local) <= best) return;
            int v = i * 64 + std::countr_zero(local[i]);
            local[i] &= local[i] - 1;
            Bits next(w);
            const std::uint64_t* rv = g.neighbor_bits(v);
            for (int j = 0; j < w; ++j) next[j] = local[j] & rv[j];
            clique_expand(g, next, size + 1, best);
        }
    }
}

/// Degeneracy ordering (repeatedly remove a min-degree vertex, ties by
/// index). Returned in removal order.
inline std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n), order;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        removed[pick] = true;
        order.push_back(pick);
        for (int u = 0; u < n; ++u)
            if (!removed[u] && g.adjacent(pick, u)) --deg[u];
    }
    return order;
}

} // namespace detail

/// Exact clique number by branch and bound over a degeneracy ordering.
inline int clique_number(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    std::vector<int> order = detail::degeneracy_order(g);
    int best = 1;
    const int w = g.word_count();
    // Seed from each vertex in degeneracy order; candidates restricted to
    // later vertices in the order, so each clique is counted once.
    std::vector<bool> later(n, true);
    for (int v : order) {
        later[v] = false;
        detail::Bits cand(w, 0);
        const std::uint64_t* rv = g.neighbor_bits(v);
        for (int u = 0; u < n; ++u)
            if (later[u] && ((rv[u / 64] >> (u % 64)) & 1ULL)) cand[u / 64] |= 1ULL << (u % 64);
        detail::clique_expand(g, cand, 1, best);
    }
    return best;
}

namespace detail {

struct DsaturState {
    const Graph& g;
    int colors_allowed;
    std::vector<int> color;      // 0 = uncolored, else 1..k
    std::vector<int> used_count; // number of colors used so far overall
    std::uint64_t budget;

    bool feasible(int max_color_so_far) {
        if (budget == 0)
            throw budget_exhausted("chromatic_number: search-node budget exhausted");
        --budget;
        int n = g.vertex_count();
        // Pick uncolored vertex with maximum saturation, tie max degree,
        // tie min index.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            std::uint64_t seen = 0;
            for (int u = 0; u < n; ++u)
                if (color[u] && g.adjacent(u, v)) seen |= 1ULL << color[u];
            int sat = std::popcount(seen);
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        if (pick < 0) return true; // all colored
        std::uint64_t forbidden = 0;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (color[u] && g.adjacent(u, pick)) forbidden |= 1ULL << color[u];
        // Canonical pruning: at most one brand-new color is tried.
        int limit = std::min(colors_allowed, max_color_so_far + 1);
        for (int c = 1; c <= limit; ++c) {
            if ((forbidden >> c) & 1ULL) continue;
            color[pick] = c;
            if (feasible(std::max(max_color_so_far, c))) return true;
            color[pick] = 0;
        }
        return false;
    }
};

inline int greedy_coloring_bound(const Graph& g) {
    // Greedy over descending-degree order.
    int n = g.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    std::vector<int> color(n, 0);
    int used = 0;
    for (int v : order) {
        std::uint64_t forbidden = 0;
        for (int u = 0; u < n; ++u)
            if (color[u] && g.adjacent(u, v)) forbidden |= 1ULL << color[u];
        int c = 1;
        while ((forbidden >> c) & 1ULL) ++c;
        color[v] = c;
        used = std::max(used, c);
    }
    return used;
}

} // namespace detail

/// Exact chromatic number. Iterative deepening between a clique lower
/// bound and a greedy upper bound, DSATUR branching, hard node budget.
/// Throws budget_exhausted instead of ever returning a wrong answer.
inline int chromatic_number(const Graph& g, std::uint64_t node_budget = 100'000'000ULL) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    if (n > 62) throw guard_error("chromatic_number: graphs above 62 vertices unsupported");
    int lb = clique_number(g);
    int ub = detail::greedy_coloring_bound(g);
    for (int k = lb; k < ub; ++k) {
        detail::DsaturState st{g, k, std::vector<int>(n, 0), {}, node_budget};
        if (st.feasible(0)) return k;
        node_budget = st.budget;
    }
    return ub;
}

/// Injective edge-preserving map of pattern into host (subgraph
/// monomorphism; non-edges of the pattern are unconstrained).
/// Deterministic: pattern vertices matched in a connectivity-first order,
/// host candidates tried ascending.
inline std::optional<VertexMapping> find_monomorphism(const Graph& pattern, const Graph& host) {
    int pn = pattern.vertex_count();
    if (pn > 12) throw guard_error("find_monomorphism: pattern above 12 vertices rejected");
    if (pn == 0) return VertexMapping{};
    if (pn > host.vertex_count()) return std::nullopt;

    // Order: repeatedly pick the unplaced pattern vertex with most edges
    // into the placed prefix, tie by degree desc, tie by index.
    std::vector<int> order;
    std::vector<bool> placed(pn, false);
    for (int step = 0; step < pn; ++step) {
        int pick = -1, pick_conn = -1, pick_deg = -1;
        for (int v = 0; v < pn; ++v) {
            if (placed[v]) continue;
            int conn = 0;
            for (int u : order)
                if (pattern.adjacent(u, v)) ++conn;
            int deg = pattern.degree(v);
            if (conn > pick_conn || (conn == pick_conn && deg > pick_deg)) {
                pick = v;
                pick_conn = conn;
                pick_deg = deg;
            }
        }
        placed[pick] = true;
        order.push_back(pick);
    }

    std::vector<int> map(pn, -1);
    std::vector<bool> used(host.vertex_count(), false);
    auto backtrack = [&](auto&& self, int depth) -> bool {
        if (depth == pn) return true;
        int p = order[depth];
        for (int h = 0; h < host.vertex_count(); ++h) {
            if (used[h] || host.degree(h) < pattern.degree(p)) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d)
                if (pattern.adjacent(order[d], p) && !host.adjacent(map[order[d]], h)) ok = false;
            if (!ok) continue;
            map[p] = h;
            used[h] = true;
            if (self(self, depth + 1)) return true;
            used[h] = false;
            map[p] = -1;
        }
        return false;
    };
    if (!backtrack(backtrack, 0)) return std::nullopt;
    return VertexMapping{std::move(map)};
}

// ---- edge-list / DOT formats ----
// Edge list: first line `p <vertex_count>`, then `e <u> <v>` per edge,
// 0-based. Lines starting with '#' are comments.

inline void write_edge_list(const Graph& g, std::ostream& os) {
    os << "p " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) os << "e " << u << " " << v << "\n";
}

inline Graph read_edge_list(std::istream& is) {
    std::string line;
    int lineno = 0;
    std::optional<Graph> g;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            int n;
            if (!(ls >> n) || g)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": bad header");
            g.emplace(n);
        } else if (tag == "e") {
            int u, v;
            if (!g || !(ls >> u >> v))
                throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": bad edge");
            g->add_edge(u, v);
        } else {
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
        }
    }
    if (!g) throw std::invalid_argument("edge list: missing 'p' header");
    return *g;
}

inline void write_dot(const Graph& g, std::ostream& os, const std::string& name = "g") {
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
}

} // namespace ehshift

#endif
