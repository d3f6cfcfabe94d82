#include <doctest.h>

#include <algorithm>
#include <random>

#include "pathnum/graph.hpp"
#include "pathnum/oracle.hpp"
#include "pathnum/structure.hpp"
#include "support.hpp"

using namespace pathnum;
using namespace pathnum::test;

TEST_CASE("brute_pn on named instances") {
    CHECK(brute_pn(path_graph(4)) == 1);
    CHECK(brute_pn(cycle_graph(4)) == 2);
    CHECK(brute_pn(complete_graph(4)) == 2);
    CHECK(brute_pn(complete_graph(5)) == 3);
    CHECK(brute_pn(star_graph(4)) == 2);
    CHECK(brute_pn(wheel_graph(4)) == 2);
    CHECK(brute_pn(Graph({}, {})) == 0);
}

TEST_CASE("brute_pn respects the edge cap") {
    CHECK_THROWS_AS(brute_pn(complete_graph(7)), std::invalid_argument);
    CHECK(brute_pn(complete_graph(7), 21) >= 3);
}

TEST_CASE("brute_pn lower bound and all-odd equality") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        GenParams p;
        p.n = 6 + static_cast<int>(seed % 3);
        p.extra = static_cast<int>(seed % 3);
        p.seed = seed;
        Graph g = gen("random_near_subcubic", p);
        int pn = brute_pn(g);
        CHECK(2 * pn >= odd_count(g));
        bool all_odd = g.m() > 0;
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) % 2 == 0) all_odd = false;
        if (all_odd) CHECK(2 * pn == odd_count(g));
    }
    // K4 is the classic all-odd instance
    CHECK(2 * brute_pn(complete_graph(4)) == odd_count(complete_graph(4)));
}

TEST_CASE("brute_pn is invariant under relabeling") {
    GenParams p;
    p.n = 7;
    p.extra = 1;
    p.seed = 11;
    Graph g = gen("random_near_subcubic", p);
    int expect = brute_pn(g);
    std::mt19937_64 rng(5);
    std::vector<int> perm(g.n());
    for (int i = 0; i < g.n(); ++i) perm[i] = i;
    for (int round = 0; round < 12; ++round) {
        for (int i = g.n() - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
        CHECK(brute_pn(build(g.n(), edges)) == expect);
    }
}

TEST_CASE("sen_bruteforce") {
    CHECK(sen_bruteforce(cycle_graph(6)) == 0);
    CHECK(sen_bruteforce(star_graph(4)) == 1);
    CHECK(sen_bruteforce(complete_graph(5)) == 3);
    CHECK(sen_bruteforce(wheel_graph(4)) == 1);
}

TEST_CASE("gen families") {
    SUBCASE("wheel n=5 is W4") {
        Graph w = gen("wheel", GenParams{.n = 5});
        CHECK(w.n() == 5);
        CHECK(w.m() == 8);
        CHECK(high_of(w) == 4);
    }
    SUBCASE("complete n=4 is K4") {
        Graph k = gen("complete", GenParams{.n = 4});
        CHECK(k.m() == 6);
    }
    SUBCASE("deterministic for a fixed seed") {
        GenParams p;
        p.n = 7;
        p.extra = 2;
        p.seed = 42;
        Graph a = gen("random_near_subcubic", p);
        Graph b = gen("random_near_subcubic", p);
        CHECK(a == b);
        p.seed = 43;
        CHECK_FALSE(gen("random_near_subcubic", p) == a);
    }
    SUBCASE("near-subcubic respects the extra budget") {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            GenParams p;
            p.n = 8;
            p.extra = 2;
            p.seed = seed;
            Graph g = gen("random_near_subcubic", p);
            int over = 0;
            for (int v = 0; v < g.n(); ++v) over += std::max(0, g.degree(v) - 3);
            CHECK(over <= 2 * p.extra);
        }
    }
    SUBCASE("pan gadgets have the requested pan cycles") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            GenParams p;
            p.count = 1 + static_cast<int>(seed % 3);
            p.seed = seed;
            Graph g = gen("pan_gadget", p);
            CHECK(pan_count(g) == p.count);
            CHECK_FALSE(is_subcubic(g));
        }
    }
    SUBCASE("bull gadgets have bull cycles") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            GenParams p;
            p.count = 1 + static_cast<int>(seed % 2);
            p.seed = seed;
            Graph g = gen("bull_gadget", p);
            CHECK(static_cast<int>(analyze(g).bull_cycles.size()) == p.count);
            CHECK(pan_count(g) == 0);
        }
    }
    SUBCASE("bad parameters") {
        CHECK_THROWS_AS(gen("random_gnm", GenParams{.n = 3, .m = 9}), std::invalid_argument);
        CHECK_THROWS_AS(gen("wheel", GenParams{.n = 3}), std::invalid_argument);
        CHECK_THROWS_AS(gen("no_such_family", GenParams{.n = 3}), std::invalid_argument);
    }
}

TEST_CASE("canonical_certificate separates isomorphism classes") {
    // same class under relabeling
    Graph a = build(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph b = build(4, {{3, 2}, {2, 0}, {0, 1}});
    CHECK(canonical_certificate(a) == canonical_certificate(b));
    // P4 vs star
    CHECK(canonical_certificate(a) != canonical_certificate(star_graph(3)));
    // regular pairs that degree counting cannot split
    Graph k33 = build(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    Graph prism = build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    CHECK(canonical_certificate(k33) != canonical_certificate(prism));
}

TEST_CASE("enumerate_graphs matches known counts") {
    auto count = [](int n, int maxdeg, bool connected_only) {
        long c = 0;
        enumerate_graphs(n, maxdeg, [&](const Graph& g) {
            if (!connected_only || components(g).size() == 1) ++c;
            return true;
        });
        return c;
    };
    CHECK(count(1, -1, false) == 1);
    CHECK(count(2, -1, false) == 2);
    CHECK(count(3, -1, false) == 4);
    CHECK(count(4, -1, false) == 11);  // all graphs on 4 vertices up to isomorphism
    CHECK(count(5, -1, false) == 34);
    CHECK(count(6, -1, false) == 156);
    CHECK(count(4, -1, true) == 6);    // connected graphs on 4 vertices
    CHECK(count(5, -1, true) == 21);
    CHECK(count(6, -1, true) == 112);
    // connected cubic graphs: 1 on 4 vertices, 2 on 6, 5 on 8
    auto cubic = [&](int n) {
        long c = 0;
        enumerate_graphs(n, 3, [&](const Graph& g) {
            if (components(g).size() != 1) return true;
            bool cubic_graph = true;
            for (int v = 0; v < g.n(); ++v)
                if (g.degree(v) != 3) cubic_graph = false;
            if (cubic_graph) ++c;
            return true;
        });
        return c;
    };
    CHECK(cubic(4) == 1);
    CHECK(cubic(6) == 2);
    CHECK(cubic(8) == 5);
}
