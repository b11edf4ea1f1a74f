#ifndef EHSHIFT_SHIFT_HPP
#define EHSHIFT_SHIFT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

#include <json.hpp>

namespace ehshift {

/// Non-degenerate closed integer interval [lo, hi], lo < hi. Points are
/// 1-based throughout this module; conversion to 0-based vertex indices
/// happens only when materializing a core Graph.
struct IntervalVertex {
    int lo = 0;
    int hi = 0;

    IntervalVertex() = default;
    IntervalVertex(int lo_, int hi_) : lo(lo_), hi(hi_) {
        if (lo < 1 || lo >= hi) throw std::invalid_argument("IntervalVertex: need 1 <= lo < hi");
    }

    friend bool operator==(IntervalVertex a, IntervalVertex b) { return a.lo == b.lo && a.hi == b.hi; }
    friend bool operator<(IntervalVertex a, IntervalVertex b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    }

    std::string str() const { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }
};

namespace detail {

inline std::uint64_t binom(std::uint64_t n, int k) {
    if (k < 0) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        if (n + 1 < static_cast<std::uint64_t>(i)) return 0;
        r = r * (n - i + 1) / i; // exact: product of i consecutive ints divisible by i!
    }
    return r;
}

} // namespace detail

/// Shift graph Sh(P, arity): vertices are all arity-sized subsets of
/// {1,...,P}; two subsets X, Y adjacent when the tail of one equals the
/// head of the other (x_{t+1} = y_t for all t, taken symmetrically).
/// For arity 2 the vertices are the intervals [i,j] and adjacency is
/// "one interval ends where the other begins". Adjacency is computed
/// structurally from endpoints; nothing is materialized unless asked.
class ShiftGraph {
public:
    ShiftGraph(int points, int arity, std::optional<int> level)
        : points_(points), arity_(arity), level_(level) {
        if (arity < 2) throw std::invalid_argument("ShiftGraph: arity must be >= 2");
        if (points < arity) throw std::invalid_argument("ShiftGraph: need points >= arity");
    }

    int point_count() const { return points_; }
    int arity() const { return arity_; }
    std::optional<int> level() const { return level_; }

    std::uint64_t vertex_count() const { return detail::binom(points_, arity_); }

    std::uint64_t edge_count() const {
        if (arity_ == 2) return detail::binom(points_, 3);
        // General arity: each edge is a (arity+1)-window of consecutive
        // overlapping subsets? Not in general; count by enumeration.
        std::uint64_t count = 0;
        auto verts = vertices();
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                if (adjacent_sets(verts[a], verts[b])) ++count;
        return count;
    }

    /// All vertices as sorted subsets, lexicographic order. Guarded.
    std::vector<std::vector<int>> vertices() const {
        if (vertex_count() > 200'000)
            throw guard_error("ShiftGraph: refusing to enumerate more than 2*10^5 vertices");
        std::vector<std::vector<int>> out;
        std::vector<int> cur(arity_);
        for (int i = 0; i < arity_; ++i) cur[i] = i + 1;
        while (true) {
            out.push_back(cur);
            int i = arity_ - 1;
            while (i >= 0 && cur[i] == points_ - (arity_ - 1 - i)) --i;
            if (i < 0) break;
            ++cur[i];
            for (int j = i + 1; j < arity_; ++j) cur[j] = cur[j - 1] + 1;
        }
        return out;
    }

    static bool adjacent_sets(const std::vector<int>& x, const std::vector<int>& y) {
        auto shifted = [](const std::vector<int>& a, const std::vector<int>& b) {
            for (std::size_t t = 0; t + 1 < a.size(); ++t)
                if (a[t + 1] != b[t]) return false;
            return true;
        };
        return shifted(x, y) || shifted(y, x);
    }

    // ---- arity-2 interval API ----

    bool contains(IntervalVertex v) const { return v.lo >= 1 && v.hi <= points_; }

    bool adjacent(IntervalVertex a, IntervalVertex b) const {
        require_arity2();
        if (!contains(a) || !contains(b)) throw std::invalid_argument("ShiftGraph: vertex out of range");
        if (a == b) return false;
        return a.hi == b.lo || b.hi == a.lo;
    }

    /// Lexicographic rank of interval [i,j] among all intervals over P points.
    std::uint64_t interval_rank(IntervalVertex v) const {
        require_arity2();
        if (!contains(v)) throw std::invalid_argument("ShiftGraph: vertex out of range");
        std::uint64_t before = 0;
        for (int i = 1; i < v.lo; ++i) before += points_ - i;
        return before + (v.hi - v.lo - 1);
    }

    IntervalVertex interval_at(std::uint64_t rank) const {
        require_arity2();
        for (int i = 1; i < points_; ++i) {
            std::uint64_t row = points_ - i;
            if (rank < row) return IntervalVertex(i, i + 1 + static_cast<int>(rank));
            rank -= row;
        }
        throw std::invalid_argument("ShiftGraph: interval rank out of range");
    }

    /// Every arity-2 edge is ([a,b],[b,c]) for a unique triple a<b<c; its
    /// rank is the lexicographic rank of the triple.
    std::uint64_t triple_rank(int a, int b, int c) const {
        require_arity2();
        if (!(1 <= a && a < b && b < c && c <= points_))
            throw std::invalid_argument("ShiftGraph: bad point triple");
        std::uint64_t x = a - 1, y = b - 1, z = c - 1, P = points_;
        std::uint64_t r = 0;
        for (std::uint64_t i = 0; i < x; ++i) r += detail::binom(P - 1 - i, 2);
        for (std::uint64_t j = x + 1; j < y; ++j) r += P - 1 - j;
        return r + (z - y - 1);
    }

    /// Materialize as a core Graph: vertices in lexicographic interval
    /// (or subset) order, labeled by their point representation.
    Graph to_graph() const {
        if (vertex_count() > 200'000)
            throw guard_error("ShiftGraph: refusing to materialize more than 2*10^5 vertices");
        if (arity_ == 2) {
            Graph g(static_cast<int>(vertex_count()));
            std::uint64_t idx = 0;
            for (int i = 1; i <= points_; ++i)
                for (int j = i + 1; j <= points_; ++j)
                    g.set_label(static_cast<int>(idx++), IntervalVertex(i, j).str());
            for (int a = 1; a <= points_; ++a)
                for (int b = a + 1; b <= points_; ++b)
                    for (int c = b + 1; c <= points_; ++c)
                        g.add_edge(static_cast<int>(interval_rank({a, b})),
                                   static_cast<int>(interval_rank({b, c})));
            return g;
        }
        auto verts = vertices();
        Graph g(static_cast<int>(verts.size()));
        for (std::size_t v = 0; v < verts.size(); ++v) {
            std::string lab = "{";
            for (std::size_t t = 0; t < verts[v].size(); ++t)
                lab += (t ? "," : "") + std::to_string(verts[v][t]);
            g.set_label(static_cast<int>(v), lab + "}");
        }
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                if (adjacent_sets(verts[a], verts[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
        return g;
    }

    nlohmann::ordered_json descriptor() const {
        nlohmann::ordered_json j;
        j["points"] = points_;
        j["arity"] = arity_;
        if (level_) j["level"] = *level_;
        else j["level"] = nullptr;
        return j;
    }

    bool operator==(const ShiftGraph& o) const {
        return points_ == o.points_ && arity_ == o.arity_;
    }

private:
    void require_arity2() const {
        if (arity_ != 2) throw std::invalid_argument("ShiftGraph: interval API requires arity 2");
    }

    int points_;
    int arity_;
    std::optional<int> level_;
};

/// Strictly increasing map from {1,...,small} into {1,...,large}.
/// image[t-1] is the image of point t.
struct PointEmbedding {
    std::vector<int> image;

    explicit PointEmbedding(std::vector<int> img) : image(std::move(img)) {
        for (std::size_t t = 0; t < image.size(); ++t) {
            if (image[t] < 1 || (t > 0 && image[t] <= image[t - 1]))
                throw std::invalid_argument("PointEmbedding: map must be strictly increasing");
        }
    }

    int apply(int point) const {
        if (point < 1 || point > static_cast<int>(image.size()))
            throw std::invalid_argument("PointEmbedding: point out of domain");
        return image[point - 1];
    }
};

/// Erdős–Hajnal graph G_k = Sh(2^k + 1, 2).
inline ShiftGraph eh_graph(int k) {
    if (k < 1) throw std::invalid_argument("eh_graph: k must be >= 1");
    if (k > 20) throw guard_error("eh_graph: 2^k + 1 points exceeds the 2^20 point guard");
    return ShiftGraph((1 << k) + 1, 2, k);
}

inline ShiftGraph shift_graph(int N, int k) {
    if (k < 2) throw std::invalid_argument("shift_graph: arity must be >= 2");
    if (N < k) throw std::invalid_argument("shift_graph: need N >= k");
    std::optional<int> level;
    if (k == 2) {
        for (int t = 1; t <= 20; ++t)
            if ((1 << t) + 1 == N) level = t;
    }
    return ShiftGraph(N, k, level);
}

struct InducedCopy {
    ShiftGraph graph;
    PointEmbedding embedding; // new point t -> original point
};

/// Induced interval graph over an ordered point subset Q, relabeled via
/// the order isomorphism Q -> {1,...,|Q|}. Structurally this is always
/// Sh(|Q|, 2); the embedding records where each relabeled point lives.
inline InducedCopy induced_on_points(const ShiftGraph& g, std::vector<int> points) {
    if (g.arity() != 2) throw std::invalid_argument("induced_on_points: arity-2 hosts only");
    std::sort(points.begin(), points.end());
    if (points.size() < 2) throw std::invalid_argument("induced_on_points: need at least 2 points");
    for (std::size_t t = 0; t < points.size(); ++t) {
        if (points[t] < 1 || points[t] > g.point_count())
            throw std::invalid_argument("induced_on_points: point outside the host range");
        if (t > 0 && points[t] == points[t - 1])
            throw std::invalid_argument("induced_on_points: duplicate point");
    }
    return InducedCopy{shift_graph(static_cast<int>(points.size()), 2), PointEmbedding(std::move(points))};
}

/// Identity embedding of the points of G_k into the points of G_m, k <= m.
inline PointEmbedding canonical_embedding(int k, int m) {
    if (k < 1 || k > m) throw std::invalid_argument("canonical_embedding: need 1 <= k <= m");
    std::vector<int> img((1 << k) + 1);
    for (std::size_t t = 0; t < img.size(); ++t) img[t] = static_cast<int>(t) + 1;
    (void)eh_graph(m); // validates m against the point guard
    return PointEmbedding(std::move(img));
}

} // namespace ehshift

#endif
