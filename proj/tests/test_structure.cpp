#include <doctest.h>

#include <algorithm>
#include <set>

#include "pathnum/oracle.hpp"
#include "pathnum/structure.hpp"
#include "support.hpp"

using namespace pathnum;
using namespace pathnum::test;

TEST_CASE("pan and bull cycles from the figure graphs") {
    // cycle a,b,c,d,e with an extra edge a-f
    Graph pan = build_tokens({"a", "b", "c", "d", "e", "f"},
                             {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"},
                              {"a", "f"}});
    auto rep = analyze(pan);
    REQUIRE(rep.pan_cycles.size() == 1);
    std::set<int> cyc(rep.pan_cycles[0].begin(), rep.pan_cycles[0].end());
    std::set<int> expect;
    for (const char* t : {"a", "b", "c", "d", "e"}) expect.insert(pan.index_of(t));
    CHECK(cyc == expect);
    CHECK(rep.pan_cycles[0][0] == pan.index_of("a"));  // listing starts at the degree-3 vertex
    CHECK(rep.bull_cycles.empty());

    // cycle u,y,v,x with extra edges v-w and u-z
    Graph bull = build_tokens({"u", "y", "v", "x", "w", "z"},
                              {{"u", "y"}, {"y", "v"}, {"v", "x"}, {"x", "u"}, {"v", "w"},
                               {"u", "z"}});
    auto rep2 = analyze(bull);
    CHECK(rep2.pan_cycles.empty());
    REQUIRE(rep2.bull_cycles.size() == 1);
    std::set<int> bc(rep2.bull_cycles[0].begin(), rep2.bull_cycles[0].end());
    std::set<int> expect2;
    for (const char* t : {"u", "y", "v", "x"}) expect2.insert(bull.index_of(t));
    CHECK(bc == expect2);
    CHECK(rep2.bull_pairs.empty());  // 4-cycle, not a triangle
}

TEST_CASE("standalone C5 has no special cycles") {
    auto rep = analyze(cycle_graph(5));
    CHECK(rep.pan_cycles.empty());
    CHECK(rep.bull_cycles.empty());
    CHECK(rep.v4.empty());
    CHECK(rep.high == 0);
}

TEST_CASE("v4 and high") {
    Graph w5 = wheel_graph(5);
    auto rep = analyze(w5);
    CHECK(rep.v4 == std::vector<int>{5});
    CHECK(rep.high == 5);
    CHECK(high_of(complete_graph(6)) == 30);
    CHECK(is_subcubic(complete_graph(4)));
    CHECK_FALSE(is_subcubic(complete_graph(5)));
}

TEST_CASE("classify_component") {
    CHECK(classify_component(cycle_graph(7)) == ComponentKind::cycle);
    CHECK(classify_component(cycle_graph(3)) == ComponentKind::cycle);
    // diamond: K4 minus one edge
    Graph diamond = build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(classify_component(diamond) == ComponentKind::subdivided_diamond);
    // a subdivision of it
    Graph subdiv = build(6, {{0, 4}, {4, 1}, {0, 2}, {1, 2}, {0, 5}, {5, 3}, {3, 1}});
    CHECK(classify_component(subdiv) == ComponentKind::subdivided_diamond);
    CHECK(classify_component(path_graph(4)) == ComponentKind::other);
    CHECK(classify_component(complete_graph(4)) == ComponentKind::other);
    // two loop chains joined by a bridge chain: degrees fit, structure does not
    Graph dumbbell = build(7, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}});
    CHECK(classify_component(dumbbell) == ComponentKind::other);
    CHECK_THROWS_AS(classify_component(build(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("is_bull_pair") {
    // triangle u,v,w with pendant edges at u and v
    Graph bt = build_tokens({"u", "v", "w", "p", "q"},
                            {{"u", "v"}, {"v", "w"}, {"w", "u"}, {"u", "p"}, {"v", "q"}});
    CHECK(is_bull_pair(bt, bt.index_of("u"), bt.index_of("v")));
    CHECK_FALSE(is_bull_pair(bt, bt.index_of("u"), bt.index_of("w")));
    Graph k4 = complete_graph(4);
    CHECK_FALSE(is_bull_pair(k4, 0, 1));
    Graph p4 = path_graph(4);
    CHECK_FALSE(is_bull_pair(p4, 0, 3));  // nonadjacent
    CHECK_THROWS_AS(is_bull_pair(p4, 1, 1), std::invalid_argument);

    auto rep = analyze(bt);
    REQUIRE(rep.bull_pairs.size() == 1);
    CHECK(rep.bull_pairs[0] == std::make_pair(bt.index_of("u"), bt.index_of("v")));
    REQUIRE(rep.bull_cycles.size() == 1);
    CHECK(rep.bull_cycles[0].size() == 3);
}

TEST_CASE("special cycles agree with a brute-force enumerator") {
    auto check_graph = [](const Graph& g) {
        std::vector<std::vector<int>> pan_expect, bull_expect;
        for (const auto& cyc : all_cycles(g)) {
            if (cycle_has_chord(g, cyc)) continue;
            int d3 = 0;
            bool rest_two = true;
            for (int v : cyc) {
                if (g.degree(v) == 3) ++d3;
                else if (g.degree(v) != 2) rest_two = false;
            }
            if (!rest_two) continue;
            if (d3 == 1) pan_expect.push_back(cyc);
            if (d3 == 2) bull_expect.push_back(cyc);
        }
        std::sort(pan_expect.begin(), pan_expect.end());
        std::sort(bull_expect.begin(), bull_expect.end());

        auto rep = analyze(g);
        std::vector<std::vector<int>> pan_got, bull_got;
        for (auto c : rep.pan_cycles) pan_got.push_back(normalize_cycle(std::move(c)));
        for (auto c : rep.bull_cycles) bull_got.push_back(normalize_cycle(std::move(c)));
        std::sort(pan_got.begin(), pan_got.end());
        std::sort(bull_got.begin(), bull_got.end());
        CHECK(pan_got == pan_expect);
        CHECK(bull_got == bull_expect);
    };

    for (int n = 3; n <= 7; ++n)
        for_each_connected(n, -1, [&](const Graph& g) {
            check_graph(g);
            return true;
        });
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        GenParams p;
        p.n = 8;
        p.extra = static_cast<int>(seed % 3);
        p.seed = seed;
        check_graph(gen("random_near_subcubic", p));
    }
}

TEST_CASE("high is at most eight times sen") {
    auto check_graph = [](const Graph& g) {
        if (g.m() > 20) return;
        CHECK(high_of(g) <= 8 * sen_bruteforce(g));
    };
    for (int n = 4; n <= 6; ++n)
        for_each_connected(n, -1, [&](const Graph& g) {
            check_graph(g);
            return true;
        });
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        GenParams p;
        p.n = 8;
        p.extra = 2;
        p.seed = seed;
        check_graph(gen("random_near_subcubic", p));
    }
}
