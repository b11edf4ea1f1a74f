#ifndef EHSHIFT_EXTRACTION_HPP
#define EHSHIFT_EXTRACTION_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bignat.hpp"
#include "coloring.hpp"
#include "errors.hpp"
#include "shift.hpp"

namespace ehshift {

// ---- the S_n tower recurrence ----

/// Largest bit length a materialized S_n value may have.
inline constexpr std::uint64_t kTowerBitGuard = 1ULL << 24;

/// S_1 = 2, S_n = 2^(S_{n-1}+2). Exact, or a tower-overflow guard error
/// (S_5 already has ~2^262146 bits).
inline BigNat s_sequence(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("s_sequence: n must be >= 1");
    BigNat s(2);
    for (std::uint64_t i = 2; i <= n; ++i) {
        auto exp = s.to_u64();
        if (!exp || *exp + 2 + 1 > kTowerBitGuard)
            throw guard_error("tower overflow: S_" + std::to_string(n) + " = 2^(S_" +
                              std::to_string(n - 1) + "+2) exceeds the 2^24-bit guard (tower height " +
                              std::to_string(n) + ")");
        s = BigNat::pow2(*exp + 2);
    }
    return s;
}

/// Bit length of S_n without materializing S_n itself: S_{n-1} + 3.
inline BigNat s_bit_length(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("s_bit_length: n must be >= 1");
    if (n == 1) return BigNat(2);
    return s_sequence(n - 1).plus(3);
}

/// An S_n value, exact when it fits the bit guard, otherwise symbolic.
struct TowerReport {
    std::uint64_t index = 0;            // the n of S_n
    std::optional<BigNat> exact;        // present iff materializable
    std::optional<BigNat> bit_length;   // present iff S_{n-1} materializable
    std::string symbolic;               // always present

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["index"] = index;
        j["exact"] = exact ? nlohmann::ordered_json(exact->to_string()) : nlohmann::ordered_json(nullptr);
        j["bit_length"] =
            bit_length ? nlohmann::ordered_json(bit_length->to_string()) : nlohmann::ordered_json(nullptr);
        j["symbolic"] = symbolic;
        return j;
    }
};

inline TowerReport tower_report(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("tower_report: n must be >= 1");
    TowerReport r;
    r.index = n;
    r.symbolic = n == 1 ? "S_1 = 2"
                        : "S_" + std::to_string(n) + " = 2^(S_" + std::to_string(n - 1) +
                              "+2), tower of height " + std::to_string(n);
    try {
        r.exact = s_sequence(n);
    } catch (const guard_error&) {
    }
    try {
        r.bit_length = s_bit_length(n);
    } catch (const guard_error&) {
    }
    return r;
}

/// The sufficient host level for extracting a monochromatic G_k:
/// N = S_{2^(k+1)}.
inline TowerReport required_host_size(int k) {
    if (k < 1) throw std::invalid_argument("required_host_size: k must be >= 1");
    if (k > 62) throw std::invalid_argument("required_host_size: k too large to index the tower");
    return tower_report(1ULL << (k + 1));
}

inline std::uint64_t ramsey_stage_budget(int k) {
    if (k < 1 || k > 62) throw std::invalid_argument("ramsey_stage_budget: bad k");
    return (1ULL << (k + 1)) - 1;
}

inline std::uint64_t ramsey_selection_size(int k) {
    if (k < 1 || k > 62) throw std::invalid_argument("ramsey_selection_size: bad k");
    return 1ULL << k;
}

// ---- extraction traces ----

/// One stage of a pigeonhole extraction: the pivot's root, the point set
/// certified monochromatic from it, and the certified color.
struct StageRecord {
    int root_point = 0;
    std::vector<int> surviving_points;
    Color stage_color = Color::Red;
};

enum class Scope { Star, Full };

inline std::string scope_name(Scope s) { return s == Scope::Star ? "star" : "full"; }

struct ExtractionTrace {
    std::string procedure; // lemma1 | ramsey | opportunistic
    int host_points = 0;
    std::optional<int> host_level;
    Scope scope = Scope::Star;
    std::vector<StageRecord> stages;
    std::vector<int> final_points;
    Color final_color = Color::Red;
    int achieved_level = 0;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["procedure"] = procedure;
        j["host"] = {{"points", host_points}, {"arity", 2}};
        j["host"]["level"] = host_level ? nlohmann::ordered_json(*host_level) : nlohmann::ordered_json(nullptr);
        j["scope"] = scope_name(scope);
        j["stages"] = nlohmann::ordered_json::array();
        for (const auto& s : stages) {
            nlohmann::ordered_json js;
            js["root"] = s.root_point;
            js["color"] = std::string(1, color_char(s.stage_color));
            js["surviving"] = s.surviving_points;
            j["stages"].push_back(js);
        }
        j["final_points"] = final_points;
        j["final_color"] = std::string(1, color_char(final_color));
        j["achieved_level"] = achieved_level;
        return j;
    }

    static ExtractionTrace from_json(const nlohmann::json& j) {
        ExtractionTrace t;
        t.procedure = j.at("procedure").get<std::string>();
        t.host_points = j.at("host").at("points").get<int>();
        if (!j.at("host").at("level").is_null()) t.host_level = j.at("host").at("level").get<int>();
        t.scope = j.at("scope").get<std::string>() == "star" ? Scope::Star : Scope::Full;
        for (const auto& js : j.at("stages")) {
            StageRecord s;
            s.root_point = js.at("root").get<int>();
            s.stage_color = parse_color(js.at("color").get<std::string>());
            s.surviving_points = js.at("surviving").get<std::vector<int>>();
            t.stages.push_back(std::move(s));
        }
        t.final_points = j.at("final_points").get<std::vector<int>>();
        t.final_color = parse_color(j.at("final_color").get<std::string>());
        t.achieved_level = j.at("achieved_level").get<int>();
        return t;
    }
};

namespace detail {

/// Internal re-verification of a certified point set, independent of the
/// search path that produced it. Star scope: every edge [r,a][a,b] with
/// a,b in Q\{r}; full scope: every edge of the induced interval graph.
inline bool scope_holds(const TwoColoring& c, const std::vector<int>& points, Color color, Scope scope) {
    if (points.size() < 2) return true;
    if (scope == Scope::Star) {
        int r = points.front();
        for (std::size_t i = 1; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (c.triple_color(r, points[i], points[j]) != color) return false;
        return true;
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            for (std::size_t l = j + 1; l < points.size(); ++l)
                if (c.triple_color(points[i], points[j], points[l]) != color) return false;
    return true;
}

struct StarResult {
    std::vector<int> mono_points; // edges [root,a][a,b] for a<b in here all carry `color`
    Color color = Color::Red;
    bool vacuous = false; // no pivot was ever classified; color is a placeholder
};

/// One run of the majority-pigeonhole star extraction from `root` over
/// the candidate pool: repeatedly pivot on the smallest candidate, keep
/// the majority color class (ties toward Red), then pigeonhole the
/// per-pivot colors. Keeps full majority classes (actual sizes).
inline StarResult star_extract(const TwoColoring& c, int root, std::vector<int> pool) {
    std::vector<std::pair<int, Color>> pivots;
    std::vector<int> cur = std::move(pool);
    while (cur.size() >= 2) {
        int p = cur.front();
        std::vector<int> red, blue;
        for (std::size_t i = 1; i < cur.size(); ++i)
            (c.triple_color(root, p, cur[i]) == Color::Red ? red : blue).push_back(cur[i]);
        Color maj = blue.size() > red.size() ? Color::Blue : Color::Red;
        pivots.emplace_back(p, maj);
        cur = maj == Color::Red ? std::move(red) : std::move(blue);
    }
    // The final leftover point only ever appears as a right endpoint, so
    // it joins the monochromatic set regardless of the chosen color.
    std::optional<int> tail;
    if (cur.size() == 1) tail = cur.front();

    StarResult res;
    if (pivots.empty()) {
        res.vacuous = true;
        if (tail) res.mono_points.push_back(*tail);
        return res;
    }
    std::size_t reds = 0;
    for (auto& [p, col] : pivots)
        if (col == Color::Red) ++reds;
    res.color = reds * 2 >= pivots.size() ? Color::Red : Color::Blue;
    for (auto& [p, col] : pivots)
        if (col == res.color) res.mono_points.push_back(p);
    if (tail) res.mono_points.push_back(*tail);
    return res;
}

} // namespace detail

/// Lemma-style star extraction with the exact hypothesis n = 2^(t+1):
/// majority halving from root 1 with the proof's per-stage size bounds,
/// then the final pigeonhole selecting 2^t same-colored pivots.
inline ExtractionTrace lemma1_extract(const TwoColoring& c, int t) {
    if (t < 1) throw std::invalid_argument("lemma1_extract: t must be >= 1");
    const ShiftGraph& h = c.host();
    std::uint64_t n = 1ULL << (t + 1);
    if (!h.level() || static_cast<std::uint64_t>(*h.level()) != n)
        throw std::invalid_argument("lemma1_extract: hypothesis requires host eh_graph(n) with n = 2^(t+1) = " +
                                    std::to_string(n));
    const int P = h.point_count();

    ExtractionTrace trace;
    trace.procedure = "lemma1";
    trace.host_points = P;
    trace.host_level = h.level();
    trace.scope = Scope::Star;

    std::vector<std::pair<int, Color>> pivots;
    std::vector<int> cur(P - 1);
    for (int i = 0; i < P - 1; ++i) cur[i] = i + 2; // {2,...,P}
    while (cur.size() >= 2) {
        int p = cur.front();
        std::vector<int> red, blue;
        for (std::size_t i = 1; i < cur.size(); ++i)
            (c.triple_color(1, p, cur[i]) == Color::Red ? red : blue).push_back(cur[i]);
        Color maj = blue.size() > red.size() ? Color::Blue : Color::Red;
        std::vector<int>& cls = maj == Color::Red ? red : blue;
        std::size_t bound = cur.size() / 2; // ceil((|cur|-1)/2)
        if (cls.size() < bound)
            throw verification_bug("lemma1_extract: majority class below the pigeonhole bound");
        cls.resize(bound); // keep the lexicographically smallest points
        pivots.emplace_back(p, maj);
        trace.stages.push_back(StageRecord{1, cls, maj});
        cur = std::move(cls);
    }
    if (pivots.size() != n)
        throw verification_bug("lemma1_extract: expected exactly 2^(t+1) pivot stages");

    std::size_t reds = 0;
    for (auto& [p, col] : pivots)
        if (col == Color::Red) ++reds;
    Color final = reds * 2 >= pivots.size() ? Color::Red : Color::Blue;
    std::size_t need = 1ULL << t;
    trace.final_points.push_back(1);
    for (auto& [p, col] : pivots) {
        if (trace.final_points.size() == need + 1) break;
        if (col == final) trace.final_points.push_back(p);
    }
    if (trace.final_points.size() != need + 1)
        throw verification_bug("lemma1_extract: final pigeonhole produced fewer than 2^t pivots");
    trace.final_color = final;
    trace.achieved_level = t;

    if (!detail::scope_holds(c, trace.final_points, final, Scope::Star))
        throw verification_bug("lemma1_extract: certified star copy failed re-verification");
    return trace;
}

/// Shared nested pipeline: repeated star extraction re-rooted at the
/// smallest surviving point, then a pigeonhole over stage colors. The
/// final point set W is the selected stage roots plus the smallest
/// survivor of the last selected stage.
inline ExtractionTrace nested_extract(const TwoColoring& c, std::uint64_t max_stages,
                                      std::optional<std::uint64_t> select_count,
                                      const std::string& procedure) {
    const ShiftGraph& h = c.host();
    const int P = h.point_count();
    if (P < 2) throw std::invalid_argument("nested_extract: host needs at least 2 points");

    ExtractionTrace trace;
    trace.procedure = procedure;
    trace.host_points = P;
    trace.host_level = h.level();
    trace.scope = Scope::Full;

    std::vector<bool> vacuous;
    int root = 1;
    std::vector<int> pool(P - 1);
    for (int i = 0; i < P - 1; ++i) pool[i] = i + 2;
    while (trace.stages.size() < max_stages && !pool.empty()) {
        detail::StarResult res = detail::star_extract(c, root, pool);
        trace.stages.push_back(StageRecord{root, res.mono_points, res.color});
        vacuous.push_back(res.vacuous);
        if (res.mono_points.size() < 2) break;
        root = res.mono_points.front();
        pool.assign(res.mono_points.begin() + 1, res.mono_points.end());
    }

    std::size_t reds = 0, classified = 0;
    for (std::size_t i = 0; i < trace.stages.size(); ++i) {
        if (vacuous[i]) continue;
        ++classified;
        if (trace.stages[i].stage_color == Color::Red) ++reds;
    }
    Color final = (classified == 0 || reds * 2 >= classified) ? Color::Red : Color::Blue;

    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < trace.stages.size(); ++i) {
        if (select_count && selected.size() == *select_count) break;
        if (vacuous[i] || trace.stages[i].stage_color == final) selected.push_back(i);
    }
    if (select_count && selected.size() < *select_count)
        throw verification_bug(procedure + ": pigeonhole selected fewer stages than the bound guarantees");
    // A vacuous stage certifies nothing; align its recorded color with
    // the final pigeonhole choice.
    for (std::size_t i : selected)
        if (vacuous[i]) trace.stages[i].stage_color = final;

    for (std::size_t i : selected) trace.final_points.push_back(trace.stages[i].root_point);
    trace.final_points.push_back(trace.stages[selected.back()].surviving_points.front());
    trace.final_color = final;
    int level = 0;
    while ((1ULL << (level + 1)) + 1 <= trace.final_points.size()) ++level;
    trace.achieved_level = level;

    if (!detail::scope_holds(c, trace.final_points, final, Scope::Full))
        throw verification_bug(procedure + ": certified induced copy failed re-verification");
    return trace;
}

/// The full pipeline at its sufficient bound N = S_{2^(k+1)}. The bound
/// is tower-sized, so on any constructible host this reports an
/// insufficient-host guard error; opportunistic_extract runs the same
/// core with actual sizes.
inline ExtractionTrace ramsey_extract(const TwoColoring& c, int k) {
    if (k < 1) throw std::invalid_argument("ramsey_extract: k must be >= 1");
    if (!c.host().level())
        throw std::invalid_argument("ramsey_extract: host must be an Erdős–Hajnal graph (level set)");
    TowerReport need = required_host_size(k);
    BigNat level(static_cast<std::uint64_t>(*c.host().level()));
    bool sufficient = need.exact && *need.exact <= level;
    if (!sufficient)
        throw guard_error("insufficient host: level " + std::to_string(*c.host().level()) +
                          " is below the bound " + need.symbolic + "; use opportunistic_extract");
    return nested_extract(c, ramsey_stage_budget(k), ramsey_selection_size(k), "ramsey");
}

/// The nested pipeline run with actual set sizes, stopping when point
/// sets exhaust. Always certifies some monochromatic induced copy
/// (|W| = 2 at worst).
inline ExtractionTrace opportunistic_extract(const TwoColoring& c) {
    return nested_extract(c, std::numeric_limits<std::uint64_t>::max(), std::nullopt, "opportunistic");
}

} // namespace ehshift

#endif
