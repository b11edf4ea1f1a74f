#ifndef EHSHIFT_COLORING_HPP
#define EHSHIFT_COLORING_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "shift.hpp"

namespace ehshift {

/// Two edge colors with the fixed order Red < Blue; all majority
/// tie-breaks in the extraction resolve toward Red.
enum class Color : std::uint8_t { Red = 0, Blue = 1 };

inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

inline Color parse_color(const std::string& tok) {
    if (tok == "R") return Color::Red;
    if (tok == "B") return Color::Blue;
    throw std::invalid_argument("unknown color token '" + tok + "'");
}

/// SplitMix64 finalizer; the one mixing primitive behind every seeded
/// coloring, so colors are a pure function of (seed, edge rank).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Total red-blue assignment over the edges of an arity-2 shift graph.
/// Backed either by a pure function of the edge triple (implicit hosts,
/// G_8 scale) or by a dense bit array indexed by canonical edge rank.
class TwoColoring {
public:
    using EdgeFn = std::function<Color(int a, int b, int c)>; // triple a<b<c

    TwoColoring(ShiftGraph host, EdgeFn fn, std::string description)
        : host_(std::move(host)), fn_(std::move(fn)), description_(std::move(description)) {
        if (host_.arity() != 2) throw std::invalid_argument("TwoColoring: arity-2 hosts only");
    }

    /// Dense storage: bits[rank] = 1 means Blue, canonical triple order.
    static TwoColoring from_bits(ShiftGraph host, std::vector<std::uint8_t> bits, std::string description) {
        if (host.arity() != 2) throw std::invalid_argument("TwoColoring: arity-2 hosts only");
        if (bits.size() != host.edge_count())
            throw std::invalid_argument("TwoColoring: bit array does not cover every edge");
        auto shared = std::make_shared<std::vector<std::uint8_t>>(std::move(bits));
        ShiftGraph h = host;
        TwoColoring c(std::move(host),
                      [shared, h](int a, int b, int cpt) {
                          return (*shared)[h.triple_rank(a, b, cpt)] ? Color::Blue : Color::Red;
                      },
                      std::move(description));
        c.dense_ = shared;
        return c;
    }

    const ShiftGraph& host() const { return host_; }
    const std::string& description() const { return description_; }
    bool materialized() const { return dense_ != nullptr; }

    /// Color of the edge ([a,b],[b,c]) given its point triple a<b<c.
    Color triple_color(int a, int b, int c) const {
        if (!(1 <= a && a < b && b < c && c <= host_.point_count()))
            throw std::invalid_argument("TwoColoring: bad point triple");
        return fn_(a, b, c);
    }

    /// Color of an edge given its two interval endpoints (any order).
    Color edge_color(IntervalVertex u, IntervalVertex v) const {
        if (!host_.adjacent(u, v))
            throw std::invalid_argument("TwoColoring: " + u.str() + "-" + v.str() + " is not a host edge");
        if (v < u) std::swap(u, v);
        // canonical form: u = [a,b], v = [b,c]
        return fn_(u.lo, u.hi, v.hi);
    }

private:
    ShiftGraph host_;
    EdgeFn fn_;
    std::string description_;
    std::shared_ptr<std::vector<std::uint8_t>> dense_;
};

/// Seeded fair coloring; per-edge streams split from the seed via
/// SplitMix64 so the result is independent of evaluation order and
/// bit-identical across platforms.
inline TwoColoring random_coloring(const ShiftGraph& host, std::uint64_t seed) {
    ShiftGraph h = host;
    return TwoColoring(
        host,
        [h, seed](int a, int b, int c) {
            std::uint64_t r = h.triple_rank(a, b, c);
            return (splitmix64(splitmix64(seed) ^ splitmix64(r + 1)) & 1ULL) ? Color::Blue : Color::Red;
        },
        "random(seed=" + std::to_string(seed) + ")");
}

inline TwoColoring constant_coloring(const ShiftGraph& host, Color c) {
    return TwoColoring(host, [c](int, int, int) { return c; },
                       std::string("constant(") + color_char(c) + ")");
}

/// Structured worst-case generator: edge ([a,b],[b,c]) is Red iff the
/// predicate on the triple holds.
inline TwoColoring adversarial_coloring(const ShiftGraph& host, std::function<bool(int, int, int)> red_pred,
                                        std::string name = "adversarial") {
    return TwoColoring(host, [p = std::move(red_pred)](int a, int b, int c) {
        return p(a, b, c) ? Color::Red : Color::Blue;
    }, std::move(name));
}

/// Named adversarial predicates usable from the CLI and test harnesses.
/// Each colors edge ([a,b],[b,c]) Red iff its predicate on the triple holds.
inline TwoColoring named_adversarial(const ShiftGraph& host, const std::string& name) {
    if (name == "mid-parity")
        return adversarial_coloring(host, [](int, int b, int) { return b % 2 == 0; }, "adversarial(mid-parity)");
    if (name == "sum-parity")
        return adversarial_coloring(host, [](int a, int b, int c) { return (a + b + c) % 2 == 0; },
                                    "adversarial(sum-parity)");
    if (name == "low-threshold") {
        int half = host.point_count() / 2;
        return adversarial_coloring(host, [half](int, int b, int) { return b <= half; },
                                    "adversarial(low-threshold)");
    }
    throw std::invalid_argument("named_adversarial: unknown generator '" + name +
                                "' (try mid-parity, sum-parity, low-threshold)");
}

/// Exhaustive stream of all 2^|E| colorings in binary-counter order over
/// the canonical edge order (bit r of the counter colors edge rank r;
/// 0 = Red). Guarded at 24 edges.
class AllColorings {
public:
    explicit AllColorings(const ShiftGraph& host) : host_(host) {
        if (host.arity() != 2) throw std::invalid_argument("AllColorings: arity-2 hosts only");
        if (host.edge_count() > 24)
            throw guard_error("AllColorings: host has more than 24 edges (2^24 coloring guard)");
        edges_ = host.edge_count();
    }

    std::uint64_t size() const { return 1ULL << edges_; }

    TwoColoring at(std::uint64_t counter) const {
        if (counter >= size()) throw std::invalid_argument("AllColorings: counter out of range");
        std::vector<std::uint8_t> bits(edges_);
        for (std::uint64_t r = 0; r < edges_; ++r) bits[r] = (counter >> r) & 1ULL;
        return TwoColoring::from_bits(host_, std::move(bits), "counter(" + std::to_string(counter) + ")");
    }

private:
    ShiftGraph host_;
    std::uint64_t edges_;
};

/// Directional colored neighborhood: all [j,k] with the edge
/// ([i,j],[j,k]) present and carrying the requested color.
inline std::vector<IntervalVertex> out_neighbors(const TwoColoring& c, IntervalVertex v, Color color) {
    if (!c.host().contains(v)) throw std::invalid_argument("out_neighbors: vertex not in host");
    std::vector<IntervalVertex> out;
    for (int k = v.hi + 1; k <= c.host().point_count(); ++k)
        if (c.triple_color(v.lo, v.hi, k) == color) out.emplace_back(v.hi, k);
    return out;
}

// ---- coloring file format ----
// Header `c host points=<P> arity=2`, then one line per edge in canonical
// order: `[a,b] [b,c] R` or `... B`. Bit-exact round trip.

inline void save_coloring(const TwoColoring& c, std::ostream& os) {
    const ShiftGraph& h = c.host();
    os << "c host points=" << h.point_count() << " arity=2\n";
    for (int a = 1; a <= h.point_count(); ++a)
        for (int b = a + 1; b <= h.point_count(); ++b)
            for (int k = b + 1; k <= h.point_count(); ++k)
                os << IntervalVertex(a, b).str() << " " << IntervalVertex(b, k).str() << " "
                   << color_char(c.triple_color(a, b, k)) << "\n";
}

namespace detail {

inline IntervalVertex parse_interval(const std::string& tok, int lineno) {
    int lo, hi;
    char lbr, comma, rbr;
    std::istringstream ss(tok);
    if (!(ss >> lbr >> lo >> comma >> hi >> rbr) || lbr != '[' || comma != ',' || rbr != ']' ||
        lo < 1 || lo >= hi)
        throw std::invalid_argument("coloring line " + std::to_string(lineno) +
                                    ": bad interval token '" + tok + "'");
    return IntervalVertex(lo, hi);
}

} // namespace detail

inline TwoColoring load_coloring(const ShiftGraph& host, std::istream& is) {
    if (host.arity() != 2) throw std::invalid_argument("load_coloring: arity-2 hosts only");
    if (host.edge_count() > (1ULL << 24))
        throw guard_error("load_coloring: host above the 2^24 edge guard");
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    std::vector<std::uint8_t> bits(host.edge_count());
    std::vector<bool> seen(host.edge_count(), false);
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            std::istringstream ls(line);
            std::string c, hosttok, ptok, atok;
            ls >> c >> hosttok >> ptok >> atok;
            if (c != "c" || hosttok != "host" || ptok != "points=" + std::to_string(host.point_count()) ||
                atok != "arity=2")
                throw std::invalid_argument("coloring line " + std::to_string(lineno) +
                                            ": header does not match host (expected 'c host points=" +
                                            std::to_string(host.point_count()) + " arity=2')");
            header_seen = true;
            continue;
        }
        std::istringstream ls(line);
        std::string t1, t2, t3, extra;
        if (!(ls >> t1 >> t2 >> t3) || (ls >> extra))
            throw std::invalid_argument("coloring line " + std::to_string(lineno) + ": malformed edge line");
        IntervalVertex u = detail::parse_interval(t1, lineno);
        IntervalVertex v = detail::parse_interval(t2, lineno);
        Color col;
        try {
            col = parse_color(t3);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("coloring line " + std::to_string(lineno) + ": " + e.what());
        }
        if (u.hi > host.point_count() || v.hi > host.point_count() || !host.adjacent(u, v))
            throw std::invalid_argument("coloring line " + std::to_string(lineno) + ": edge not in host: " +
                                        u.str() + " " + v.str());
        if (v < u) std::swap(u, v);
        std::uint64_t rank = host.triple_rank(u.lo, u.hi, v.hi);
        if (seen[rank])
            throw std::invalid_argument("coloring line " + std::to_string(lineno) + ": duplicate edge " +
                                        u.str() + " " + v.str());
        seen[rank] = true;
        bits[rank] = col == Color::Blue ? 1 : 0;
    }
    if (!header_seen) throw std::invalid_argument("coloring file: missing header line");
    for (std::uint64_t r = 0; r < seen.size(); ++r)
        if (!seen[r]) {
            for (int a = 1; a <= host.point_count(); ++a)
                for (int b = a + 1; b <= host.point_count(); ++b)
                    for (int k = b + 1; k <= host.point_count(); ++k)
                        if (host.triple_rank(a, b, k) == r)
                            throw std::invalid_argument("coloring file: missing edge " +
                                                        IntervalVertex(a, b).str() + " " +
                                                        IntervalVertex(b, k).str());
            throw std::invalid_argument("coloring file: missing edge rank " + std::to_string(r));
        }
    return TwoColoring::from_bits(host, std::move(bits), "file");
}

/// Edge-by-edge equality over a common host. Guarded by materialization
/// cost; intended for tests and round-trip checks.
inline bool colorings_equal(const TwoColoring& a, const TwoColoring& b) {
    if (!(a.host() == b.host())) return false;
    const ShiftGraph& h = a.host();
    if (h.edge_count() > (1ULL << 24)) throw guard_error("colorings_equal: host too large");
    for (int x = 1; x <= h.point_count(); ++x)
        for (int y = x + 1; y <= h.point_count(); ++y)
            for (int z = y + 1; z <= h.point_count(); ++z)
                if (a.triple_color(x, y, z) != b.triple_color(x, y, z)) return false;
    return true;
}

} // namespace ehshift

#endif
