#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <ehshift/extraction.hpp>
#include <ehshift/verify.hpp>

using namespace ehshift;

TEST_CASE("verify_structured_copy") {
    TwoColoring red = constant_coloring(eh_graph(2), Color::Red);
    CHECK(verify_structured_copy(red, {1, 2, 3, 4, 5}, Color::Red, Scope::Full));
    CHECK_FALSE(verify_structured_copy(red, {1, 2, 3}, Color::Blue, Scope::Full));
    CHECK(verify_structured_copy(red, {5, 3, 1, 3}, Color::Red, Scope::Star)); // order/dup tolerant

    TwoColoring mid = named_adversarial(eh_graph(2), "mid-parity");
    // triples through b=2 are Red, through b=3 are Blue
    CHECK(verify_structured_copy(mid, {1, 2, 3}, Color::Red, Scope::Full));
    CHECK(verify_structured_copy(mid, {1, 3, 5}, Color::Blue, Scope::Full));
    CHECK_FALSE(verify_structured_copy(mid, {1, 2, 3, 4}, Color::Red, Scope::Full));
    // star scope from r=1 only checks triples (1,a,b); {1,2,4} has b=2 Red
    CHECK(verify_structured_copy(mid, {1, 2, 4}, Color::Red, Scope::Star));

    CHECK_THROWS_AS(verify_structured_copy(red, {3}, Color::Red, Scope::Star), std::invalid_argument);
    CHECK_THROWS_AS(verify_structured_copy(red, {0, 2}, Color::Red, Scope::Star), std::invalid_argument);
    CHECK_THROWS_AS(verify_structured_copy(red, {1, 6}, Color::Red, Scope::Star), std::invalid_argument);
}

TEST_CASE("verify_trace accepts genuine traces and rejects tampered ones") {
    TwoColoring c = random_coloring(eh_graph(4), 42);
    ExtractionTrace tr = lemma1_extract(c, 1);
    REQUIRE(verify_trace(c, tr));

    ExtractionTrace wrong_host = tr;
    wrong_host.host_points = 9;
    CHECK_FALSE(verify_trace(c, wrong_host));

    ExtractionTrace flipped = tr;
    flipped.final_color = flipped.final_color == Color::Red ? Color::Blue : Color::Red;
    CHECK_FALSE(verify_trace(c, flipped));

    // a trace is not transferable to a different coloring (1000 seeds at
    // t=1 all verify against their own coloring; a mismatched one should
    // generically fail)
    TwoColoring other = random_coloring(eh_graph(4), 43);
    ExtractionTrace tr_other = lemma1_extract(other, 1);
    bool both = verify_trace(other, tr) && verify_trace(c, tr_other);
    CHECK_FALSE(both);
}

TEST_CASE("verify_trace on nested traces") {
    TwoColoring c = random_coloring(eh_graph(5), 3);
    ExtractionTrace tr = opportunistic_extract(c);
    REQUIRE(verify_trace(c, tr));

    // a recolored stage must fail the replay
    ExtractionTrace bad_stage = tr;
    bool had_multi = false;
    for (auto& s : bad_stage.stages)
        if (s.surviving_points.size() >= 2) {
            s.stage_color = s.stage_color == Color::Red ? Color::Blue : Color::Red;
            had_multi = true;
            break;
        }
    if (had_multi) CHECK_FALSE(verify_trace(c, bad_stage));
}

TEST_CASE("contains_mono_copy") {
    TwoColoring red3 = constant_coloring(eh_graph(3), Color::Red);
    // G_3 is triangle-free, so even the all-red coloring has no mono K_3
    CHECK_FALSE(contains_mono_copy(red3, complete_graph(3)).has_value());
    // but it has a red copy of the one-edge core of G_1
    auto hit = contains_mono_copy(red3, eh_graph(1).to_graph());
    REQUIRE(hit.has_value());
    CHECK(hit->first == Color::Red);
    CHECK(hit->second.to_host.size() == 3);

    TwoColoring blue2 = constant_coloring(eh_graph(2), Color::Blue);
    auto hb = contains_mono_copy(blue2, eh_graph(1).to_graph());
    REQUIRE(hb.has_value());
    CHECK(hb->first == Color::Blue);

    // every coloring of G_2 contains some monochromatic path P_3: spot
    // check a few, validating the returned mapping
    ShiftGraph host = eh_graph(2);
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL, 17ULL}) {
        TwoColoring c = random_coloring(host, seed);
        auto m = contains_mono_copy(c, p3);
        REQUIRE(m.has_value());
        auto& map = m->second.to_host;
        IntervalVertex u = host.interval_at(map[0]), v = host.interval_at(map[1]),
                       w = host.interval_at(map[2]);
        CHECK(c.edge_color(u, v) == m->first);
        CHECK(c.edge_color(v, w) == m->first);
    }

    CHECK_THROWS_AS(contains_mono_copy(red3, complete_graph(13)), guard_error);
}

TEST_CASE("ramsey_check exhaustive small cases") {
    // host G_1 = a single edge, pattern G_1: only the 2 monochromatic
    // colorings of one edge both contain the pattern
    RamseyVerdict both = ramsey_check(eh_graph(1), eh_graph(1).to_graph());
    CHECK(both.forced);
    CHECK(both.mode == RamseyVerdict::Mode::Exhaustive);
    CHECK(both.colorings_checked == 2);
    CHECK_FALSE(both.witness_rank.has_value());

    // pattern larger than anything the host holds: rank 0 already fails
    RamseyVerdict nope = ramsey_check(eh_graph(1), eh_graph(2).to_graph());
    CHECK_FALSE(nope.forced);
    CHECK(nope.colorings_checked == 1);
    REQUIRE(nope.witness_rank.has_value());
    CHECK(*nope.witness_rank == 0);

    // host G_2 vs pattern G_1 over all 1024 colorings
    RamseyVerdict g2 = ramsey_check(eh_graph(2), eh_graph(1).to_graph());
    CHECK(g2.mode == RamseyVerdict::Mode::Exhaustive);
    if (!g2.forced) {
        REQUIRE(g2.witness_coloring.has_value());
        CHECK_FALSE(contains_mono_copy(*g2.witness_coloring, eh_graph(1).to_graph()).has_value());
    } else {
        CHECK(g2.colorings_checked == 1024);
    }
}

TEST_CASE("ramsey_check witness is minimal and re-validated") {
    ShiftGraph host = shift_graph(4, 2);
    Graph pattern = eh_graph(1).to_graph();
    RamseyVerdict v = ramsey_check(host, pattern);
    if (!v.forced) {
        REQUIRE(v.witness_rank.has_value());
        REQUIRE(v.witness_coloring.has_value());
        CHECK_FALSE(contains_mono_copy(*v.witness_coloring, pattern).has_value());
        // every earlier rank does contain a copy
        AllColorings all(host);
        for (std::uint64_t r = 0; r < *v.witness_rank; ++r)
            CHECK(contains_mono_copy(all.at(r), pattern).has_value());
    }
}

TEST_CASE("ramsey_check is deterministic across thread counts") {
    ShiftGraph host = eh_graph(2);
    Graph pattern = eh_graph(1).to_graph();
    RamseyVerdict a = ramsey_check(host, pattern, std::nullopt, 1);
    RamseyVerdict b = ramsey_check(host, pattern, std::nullopt, 4);
    CHECK(a.forced == b.forced);
    CHECK(a.witness_rank == b.witness_rank);
}

TEST_CASE("ramsey_check sampled mode never claims exhaustive forcing") {
    RamseyVerdict v = ramsey_check(eh_graph(2), eh_graph(1).to_graph(), SampledMode{20, 0});
    CHECK(v.mode == RamseyVerdict::Mode::Sampled);
    CHECK(v.colorings_checked <= 20);
    if (!v.forced) {
        REQUIRE(v.witness_coloring.has_value());
        CHECK_FALSE(contains_mono_copy(*v.witness_coloring, eh_graph(1).to_graph()).has_value());
    }
    auto j = v.to_json();
    CHECK(j["mode"] == "sampled");
}

TEST_CASE("classical_ramsey around R(3,3) = 6") {
    RamseyVerdict six = classical_ramsey(3, 3, 6);
    CHECK(six.forced);
    CHECK(six.colorings_checked == 32768);

    for (int n : {3, 4, 5}) {
        RamseyVerdict v = classical_ramsey(3, 3, n);
        CHECK_FALSE(v.forced);
        REQUIRE(v.witness_rank.has_value());
        // validate the witness: neither class has a triangle
        auto [red, blue] = detail::classical_classes(n, *v.witness_rank);
        CHECK_FALSE(detail::has_clique(red, n, 3));
        CHECK_FALSE(detail::has_clique(blue, n, 3));
    }

    CHECK(classical_ramsey(3, 3, 7).forced); // monotone above the threshold

    CHECK_THROWS_AS(classical_ramsey(3, 3, 8), guard_error);
    CHECK_THROWS_AS(classical_ramsey(0, 3, 5), std::invalid_argument);
}

TEST_CASE("classical_ramsey asymmetric cases") {
    // R(2,t) = t: a red edge or a blue K_t
    CHECK(classical_ramsey(2, 3, 3).forced);
    CHECK_FALSE(classical_ramsey(2, 3, 2).forced);
    CHECK(classical_ramsey(3, 2, 3).forced);
    // R(3,4) = 9 > 7, so n = 7 is not forced
    CHECK_FALSE(classical_ramsey(3, 4, 7).forced);
}

TEST_CASE("classical witness edges decode the mask") {
    auto edges = classical_witness_edges(3, 0b101);
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == std::make_tuple(0, 1, Color::Blue));
    CHECK(edges[1] == std::make_tuple(0, 2, Color::Red));
    CHECK(edges[2] == std::make_tuple(1, 2, Color::Blue));
}

TEST_CASE("forcing is monotone in the host on small instances") {
    // if a pattern is forced on Sh(4,2) it is forced on Sh(5,2), whose
    // colorings restrict to colorings of the smaller host
    Graph pattern = eh_graph(1).to_graph();
    RamseyVerdict small = ramsey_check(shift_graph(4, 2), pattern);
    RamseyVerdict large = ramsey_check(eh_graph(2), pattern);
    if (small.forced) CHECK(large.forced);
}

TEST_CASE("verdict JSON") {
    RamseyVerdict v = classical_ramsey(3, 3, 5);
    auto j = v.to_json("w.txt");
    CHECK(j["schema_version"] == 1);
    CHECK(j["forced"] == false);
    CHECK(j["mode"] == "exhaustive");
    CHECK(j["witness_rank"] == *v.witness_rank);
    CHECK(j["witness_file"] == "w.txt");
    auto j2 = classical_ramsey(3, 3, 4).to_json();
    CHECK(j2["witness_file"].is_null());
}
