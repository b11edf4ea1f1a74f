#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>
#include <string>

#include <ehshift/coloring.hpp>
#include <ehshift/shift.hpp>

using namespace ehshift;

namespace {

std::string serialized(const TwoColoring& c) {
    std::ostringstream os;
    save_coloring(c, os);
    return os.str();
}

} // namespace

TEST_CASE("random coloring is deterministic and total") {
    TwoColoring a = random_coloring(eh_graph(1), 0);
    TwoColoring b = random_coloring(eh_graph(1), 0);
    CHECK(a.triple_color(1, 2, 3) == b.triple_color(1, 2, 3));

    TwoColoring c = random_coloring(eh_graph(2), 7);
    int reds = 0;
    for (int a2 = 1; a2 <= 5; ++a2)
        for (int b2 = a2 + 1; b2 <= 5; ++b2)
            for (int k = b2 + 1; k <= 5; ++k)
                if (c.triple_color(a2, b2, k) == Color::Red) ++reds;
    CHECK(reds >= 0);
    CHECK(reds <= 10);

    CHECK(serialized(random_coloring(eh_graph(2), 99)) == serialized(random_coloring(eh_graph(2), 99)));
    CHECK(serialized(random_coloring(eh_graph(2), 99)) != serialized(random_coloring(eh_graph(2), 100)));
}

TEST_CASE("random coloring red fraction is fair over many seeds") {
    std::uint64_t reds = 0, total = 0;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        TwoColoring c = random_coloring(eh_graph(2), seed);
        for (int a = 1; a <= 5; ++a)
            for (int b = a + 1; b <= 5; ++b)
                for (int k = b + 1; k <= 5; ++k) {
                    ++total;
                    if (c.triple_color(a, b, k) == Color::Red) ++reds;
                }
    }
    double frac = static_cast<double>(reds) / static_cast<double>(total);
    CHECK(frac > 0.48);
    CHECK(frac < 0.52);
}

TEST_CASE("edge_color validates adjacency and canonicalizes order") {
    TwoColoring c = constant_coloring(eh_graph(2), Color::Blue);
    CHECK(c.edge_color({1, 2}, {2, 4}) == Color::Blue);
    CHECK(c.edge_color({2, 4}, {1, 2}) == Color::Blue);
    CHECK_THROWS_AS(c.edge_color({1, 2}, {1, 3}), std::invalid_argument);
}

TEST_CASE("out_neighbors") {
    TwoColoring all_red = constant_coloring(eh_graph(2), Color::Red);
    auto nr = out_neighbors(all_red, {1, 2}, Color::Red);
    REQUIRE(nr.size() == 3);
    CHECK(nr[0] == IntervalVertex(2, 3));
    CHECK(nr[1] == IntervalVertex(2, 4));
    CHECK(nr[2] == IntervalVertex(2, 5));
    CHECK(out_neighbors(all_red, {1, 2}, Color::Blue).empty());

    CHECK_THROWS_AS(out_neighbors(all_red, {1, 9}, Color::Red), std::invalid_argument);
}

TEST_CASE("out_neighbors partitions the forward neighborhood") {
    for (int n : {2, 3, 4}) {
        ShiftGraph host = eh_graph(n);
        TwoColoring c = random_coloring(host, 5);
        auto nr = out_neighbors(c, {1, 2}, Color::Red);
        auto nb = out_neighbors(c, {1, 2}, Color::Blue);
        CHECK(nr.size() + nb.size() == static_cast<std::size_t>((1 << n) - 1));
        std::set<std::pair<int, int>> u;
        for (auto v : nr) u.insert({v.lo, v.hi});
        for (auto v : nb) u.insert({v.lo, v.hi});
        CHECK(u.size() == nr.size() + nb.size()); // disjoint
    }
}

TEST_CASE("all_colorings") {
    AllColorings one(eh_graph(1));
    CHECK(one.size() == 2);
    CHECK(one.at(0).triple_color(1, 2, 3) == Color::Red);
    CHECK(one.at(1).triple_color(1, 2, 3) == Color::Blue);

    AllColorings ten(eh_graph(2));
    CHECK(ten.size() == 1024);

    CHECK_THROWS_AS(AllColorings(eh_graph(3)), guard_error); // 84 edges > 24
}

TEST_CASE("all_colorings emits distinct colorings exhaustively") {
    // Sh(5,2) has 10 edges; distinctness checked by serialization.
    AllColorings all(eh_graph(2));
    std::set<std::string> seen;
    for (std::uint64_t r = 0; r < all.size(); ++r) seen.insert(serialized(all.at(r)));
    CHECK(seen.size() == 1024);
}

TEST_CASE("save/load round trip") {
    TwoColoring c = random_coloring(eh_graph(2), 1);
    std::istringstream is(serialized(c));
    TwoColoring back = load_coloring(eh_graph(2), is);
    CHECK(colorings_equal(c, back));
    CHECK(serialized(back) == serialized(c));
}

TEST_CASE("load_coloring error reporting") {
    std::string good = serialized(random_coloring(eh_graph(2), 1));
    std::vector<std::string> lines;
    {
        std::istringstream is(good);
        std::string l;
        while (std::getline(is, l)) lines.push_back(l);
    }
    REQUIRE(lines.size() == 11); // header + 10 edges

    auto join = [](const std::vector<std::string>& ls) {
        std::string s;
        for (const auto& l : ls) s += l + "\n";
        return s;
    };

    SECTION("missing edge") {
        std::vector<std::string> nine(lines.begin(), lines.end() - 1);
        std::istringstream is(join(nine));
        try {
            load_coloring(eh_graph(2), is);
            FAIL("expected missing-edge error");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("missing edge") != std::string::npos);
            CHECK(std::string(e.what()).find("[3,4] [4,5]") != std::string::npos);
        }
    }
    SECTION("duplicate edge") {
        std::vector<std::string> dup = lines;
        dup.push_back(lines[1]);
        std::istringstream is(join(dup));
        try {
            load_coloring(eh_graph(2), is);
            FAIL("expected duplicate-edge error");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("duplicate edge") != std::string::npos);
            CHECK(std::string(e.what()).find("line 12") != std::string::npos);
        }
    }
    SECTION("unknown color token") {
        std::vector<std::string> bad = lines;
        bad[3].back() = 'G';
        std::istringstream is(join(bad));
        try {
            load_coloring(eh_graph(2), is);
            FAIL("expected color token error");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("unknown color token") != std::string::npos);
            CHECK(std::string(e.what()).find("line 4") != std::string::npos);
        }
    }
    SECTION("edge not in host") {
        std::istringstream is("c host points=5 arity=2\n[1,2] [1,3] R\n");
        try {
            load_coloring(eh_graph(2), is);
            FAIL("expected non-edge error");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("edge not in host") != std::string::npos);
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SECTION("header mismatch") {
        std::istringstream is("c host points=7 arity=2\n");
        CHECK_THROWS_AS(load_coloring(eh_graph(2), is), std::invalid_argument);
    }
}

TEST_CASE("adversarial generators") {
    ShiftGraph host = eh_graph(2);
    TwoColoring byparity = named_adversarial(host, "mid-parity");
    CHECK(byparity.triple_color(1, 2, 3) == Color::Red);  // b=2 even
    CHECK(byparity.triple_color(1, 3, 5) == Color::Blue); // b=3 odd
    CHECK_THROWS_AS(named_adversarial(host, "nope"), std::invalid_argument);

    TwoColoring custom = adversarial_coloring(host, [](int a, int, int c) { return a + c > 5; });
    CHECK(custom.triple_color(1, 2, 3) == Color::Blue);
    CHECK(custom.triple_color(2, 3, 5) == Color::Red);
}

TEST_CASE("implicit colorings never materialize") {
    // G_8 scale: 257 points, ~2.8M edges; constructing and probing the
    // coloring must be cheap.
    ShiftGraph big = eh_graph(8);
    TwoColoring c = random_coloring(big, 3);
    CHECK_FALSE(c.materialized());
    (void)c.triple_color(1, 2, 257);
    (void)c.triple_color(100, 180, 255);
}
