#include <cstdint>

#include "doctest.h"
#include "oracles.hpp"

#include "cycc/convexity.hpp"
#include "cycc/generators.hpp"

using namespace cycc;

TEST_SUITE("convexity") {

TEST_CASE("interval examples") {
    CHECK(interval(complete_graph(3), VertexSet(3, {0, 1})) == VertexSet(3, {0, 1, 2}));
    CHECK(interval(cycle_graph(4), VertexSet(4, {0, 1})) == VertexSet(4, {0, 1}));
    CHECK(interval(cycle_graph(4), VertexSet(4, {0, 1, 2})) == VertexSet::full(4));
}

TEST_CASE("hull examples and trace shape") {
    Graph k4 = complete_graph(4);
    HullTrace t = hull(k4, VertexSet(4, {0, 1}));
    CHECK(t.final == VertexSet::full(4));
    REQUIRE(t.rounds.size() == 2);  // seed, then both remaining vertices at once
    CHECK(t.rounds[0] == VertexSet(4, {0, 1}));
    CHECK(t.rounds[1] == VertexSet::full(4));

    CHECK(hull(k4, VertexSet(4)).final == VertexSet(4));

    Graph bowtie = chordal_chain({complete_graph(3), complete_graph(3)});
    CHECK(hull(bowtie, VertexSet(5, {0, 1})).final == VertexSet(5, {0, 1, 2}));
}

TEST_CASE("is_convex / is_hull_set / redundant_vertices examples") {
    CHECK(is_convex(cycle_graph(4), VertexSet(4, {0, 1})));
    CHECK_FALSE(is_convex(complete_graph(3), VertexSet(3, {0, 1})));
    CHECK(is_convex(path_graph(5), VertexSet::full(5)));

    CHECK(is_hull_set(complete_graph(3), VertexSet(3, {0, 1})));
    CHECK_FALSE(is_hull_set(cycle_graph(5), VertexSet(5, {0, 1})));
    CHECK_FALSE(is_hull_set(path_graph(3), VertexSet(3, {0, 2})));

    CHECK(redundant_vertices(complete_graph(3), VertexSet::full(3)) == VertexSet::full(3));
    CHECK(redundant_vertices(cycle_graph(4), VertexSet(4, {0, 1})).empty());
    CHECK(redundant_vertices(path_graph(3), VertexSet(3, {0, 1})).empty());
}

TEST_CASE("closure axioms on random instances") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 10)(rng);
        Graph g = oracles::random_connected_graph(n, rng);
        VertexSet s = oracles::random_subset(n, rng);
        VertexSet hs = hull_set_of(g, s);

        CHECK(s.is_subset_of(hs));             // extensivity
        CHECK(hull_set_of(g, hs) == hs);       // idempotence
        CHECK(is_convex(g, hs));

        VertexSet t = s | oracles::random_subset(n, rng, 0.2);
        CHECK(hs.is_subset_of(hull_set_of(g, t)));  // monotonicity

        // Strictly increasing rounds ending at the fixed point.
        HullTrace trace = hull(g, s);
        REQUIRE(!trace.rounds.empty());
        CHECK(trace.rounds.back() == trace.final);
        for (std::size_t i = 1; i < trace.rounds.size(); ++i) {
            CHECK(trace.rounds[i - 1].is_subset_of(trace.rounds[i]));
            CHECK(trace.rounds[i - 1].count() < trace.rounds[i].count());
        }
    }
}

TEST_CASE("hull minimality against exhaustive convex-set enumeration") {
    auto check_graph = [](const Graph& g) {
        const int n = g.vertex_count();
        std::vector<char> convex(std::size_t{1} << n, 0);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
            convex[mask] = is_convex(g, oracles::mask_to_set(n, mask));
        for (std::uint64_t smask = 0; smask < (std::uint64_t{1} << n); ++smask) {
            VertexSet hs = hull_set_of(g, oracles::mask_to_set(n, smask));
            std::uint64_t hmask = 0;
            hs.for_each([&](int v) { hmask |= std::uint64_t{1} << v; });
            for (std::uint64_t cmask = 0; cmask < (std::uint64_t{1} << n); ++cmask)
                if (convex[cmask] && (smask & ~cmask) == 0) CHECK((hmask & ~cmask) == 0);
        }
    };
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : oracles::all_connected_graphs(n)) check_graph(g);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) check_graph(oracles::random_connected_graph(6, rng));
}

TEST_CASE("Proposition 3.3: seeds per hull component") {
    std::mt19937 rng(29);
    int checked_components = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 10)(rng);
        Graph g = oracles::random_connected_graph(n, rng);
        VertexSet s = oracles::random_subset(n, rng);
        if (s.empty()) continue;
        VertexSet hs = hull_set_of(g, s);
        for (const VertexSet& comp : connected_components(g, hs)) {
            int seeds = comp.intersection_count(s);
            if (comp.count() == 1)
                CHECK(seeds == 1);
            else
                CHECK(seeds >= 2);
            ++checked_components;
        }
    }
    CHECK(checked_components > 300);
}

TEST_CASE("interval rule equals literal cycle definition") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : oracles::all_connected_graphs(n))
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                VertexSet s = oracles::mask_to_set(n, mask);
                CHECK(interval(g, s) == oracles::interval_oracle(g, s));
            }
    std::mt19937 rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        Graph g = oracles::random_connected_graph(6, rng);
        VertexSet s = oracles::random_subset(6, rng);
        CHECK(interval(g, s) == oracles::interval_oracle(g, s));
    }
}

}  // TEST_SUITE
