#include <doctest.h>

#include <stdexcept>

#include "pathnum/oracle.hpp"
#include "pathnum/solver.hpp"
#include "pathnum/structure.hpp"
#include "pathnum/subcubic.hpp"
#include "support.hpp"

using namespace pathnum;
using namespace pathnum::test;

namespace {

Graph triangle_with_pendant() {
    // triangle a,b,c plus pendant edge a-d
    return build_tokens({"a", "b", "c", "d"},
                        {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "d"}});
}

}  // namespace

TEST_CASE("pn_subcubic on named instances") {
    CHECK(pn_subcubic(cycle_graph(5)) == 2);
    CHECK(pn_subcubic(complete_graph(4)) == 2);
    CHECK(pn_subcubic(path_graph(5)) == 1);
    CHECK(pn_subcubic(build(1, {})) == 0);

    Graph g = triangle_with_pendant();
    CHECK(odd_count(g) == 2);
    CHECK(pan_count(g) == 1);
    CHECK(brute_pn(g) == 2);
    CHECK(pn_subcubic(g) == 2);
}

TEST_CASE("pn_subcubic rejects bad input") {
    CHECK_THROWS_AS(pn_subcubic(complete_graph(5)), std::invalid_argument);
    CHECK_THROWS_AS(pn_subcubic(build(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("reduce_pan_cycle") {
    Graph g = triangle_with_pendant();
    std::vector<int> c{g.index_of("a"), g.index_of("b"), g.index_of("c")};
    Graph reduced = reduce_pan_cycle(g, c);
    CHECK(reduced.n() == 2);
    CHECK(reduced.m() == 1);
    CHECK(reduced.has_edge(reduced.index_of("a"), reduced.index_of("d")));
    CHECK(brute_pn(g) == brute_pn(reduced) + 1);

    // an all-degree-2 cycle is not a pan cycle
    Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(reduce_pan_cycle(c4, {0, 1, 2, 3}), std::invalid_argument);

    // two disjoint pan cycles: reducing one leaves the other intact
    Graph two = build_tokens(
        {"a", "b", "c", "m", "x", "y", "z"},
        {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "m"}, {"m", "x"},
         {"x", "y"}, {"y", "z"}, {"z", "x"}});
    REQUIRE(pan_count(two) == 2);
    std::vector<int> first{two.index_of("a"), two.index_of("b"), two.index_of("c")};
    Graph after = reduce_pan_cycle(two, first);
    CHECK(pan_count(after) == 1);
}

TEST_CASE("reduce_pan_cycle drops brute_pn by one on gadget instances") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        GenParams p;
        p.count = 1 + static_cast<int>(seed % 2);
        p.seed = seed;
        Graph g = gen("pan_gadget", p);
        auto pans = analyze(g).pan_cycles;
        REQUIRE_FALSE(pans.empty());
        Graph reduced = reduce_pan_cycle(g, pans.front());
        CHECK(brute_pn(g) == brute_pn(reduced) + 1);
    }
}

TEST_CASE("partition_subcubic on named instances") {
    SUBCASE("C5 splits into two paths") {
        auto part = partition_subcubic(cycle_graph(5));
        CHECK(part.size() == 2);
        CHECK(verify_partition(cycle_graph(5), part));
    }
    SUBCASE("K4 into two three-edge paths") {
        auto part = partition_subcubic(complete_graph(4));
        CHECK(part.size() == 2);
        CHECK(verify_partition(complete_graph(4), part));
        for (const Path& p : part.paths) CHECK(p.length() == 3);
    }
    SUBCASE("a path is its own partition") {
        auto part = partition_subcubic(path_graph(5));
        REQUIRE(part.size() == 1);
        CHECK(part.paths[0].length() == 4);
    }
    SUBCASE("single vertex gets the empty partition") {
        CHECK(partition_subcubic(build(1, {})).size() == 0);
    }
}

TEST_CASE("subcubic solver equals brute force exhaustively up to n=7") {
    long count = 0;
    for (int n = 1; n <= 7; ++n)
        for_each_connected(n, 3, [&](const Graph& g) {
            int expect = brute_pn(g);
            CHECK(pn_subcubic(g) == expect);
            CHECK(2 * expect >= odd_count(g));
            auto part = partition_subcubic(g);
            CHECK(part.size() == expect);
            CHECK(verify_partition(g, part));
            ++count;
            return true;
        });
    CHECK(count == 113);  // connected subcubic graphs with at most 7 vertices
}

TEST_CASE("subcubic partition on tricky shapes") {
    // subdivided diamonds of various arc lengths
    Graph d1 = build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    Graph d2 = build(7, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 1}});
    for (const Graph& g : {d1, d2}) {
        auto part = partition_subcubic(g);
        CHECK(part.size() == 2);
        CHECK(verify_partition(g, part));
    }
    // theta graph: two degree-3 vertices, three arcs, no direct edge
    Graph theta = build(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    CHECK(classify_component(theta) == ComponentKind::subdivided_diamond);
    CHECK(partition_subcubic(theta).size() == 2);
    // two triangles sharing a vertex is not subcubic
    Graph nested = build_tokens({"a", "b", "c", "d", "e"},
                                {{"a", "b"}, {"b", "c"}, {"c", "a"},
                                 {"a", "d"}, {"d", "e"}, {"e", "a"}});
    CHECK_FALSE(is_subcubic(nested));
}
