#include <cstdint>

#include "doctest.h"
#include "oracles.hpp"

#include "cycc/convexity.hpp"
#include "cycc/generators.hpp"
#include "cycc/independence.hpp"

using namespace cycc;

namespace {

// Does the subset induce any edge?
bool induces_edge(const Graph& g, const VertexSet& s) {
    bool found = false;
    s.for_each([&](int v) {
        if (g.neighbors(v).intersects(s)) found = true;
    });
    return found;
}

// Lemma 3.2/3.4 shape checks for an E-independent set of size >= 3.
void check_lemma_shape(const Graph& g, const VertexSet& s) {
    // Lemma 3.4(b): at least one edge.
    CHECK(induces_edge(g, s));
    // Lemma 3.4(d): no subset induces a cycle (the set induces a forest).
    const int n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet sub = oracles::mask_to_set(n, mask);
        if (sub.is_subset_of(s)) CHECK_FALSE(oracles::induces_cycle(g, sub));
    }
    // Lemma 3.4(e): at most one member lying on no cycle of G.
    int off_cycle = 0;
    s.for_each([&](int v) {
        if (!oracles::cycle_through(g, g.vertices().minus(v), v)) ++off_cycle;
    });
    CHECK(off_cycle <= 1);
    // Lemma 3.4(c): the hull has at most two components, at most one trivial.
    auto comps = connected_components(g, hull_set_of(g, s));
    CHECK(comps.size() <= 2);
    if (comps.size() == 2) CHECK((comps[0].count() == 1 || comps[1].count() == 1));
}

}  // namespace

TEST_SUITE("independence") {

TEST_CASE("C-independence examples") {
    CHECK(c_independence_witness(complete_graph(3), VertexSet(3, {0, 1})) == 2);
    CHECK_FALSE(c_independence_witness(cycle_graph(4), VertexSet(4, {0, 2})).has_value());
    CHECK(c_independence_witness(path_graph(4), VertexSet(4, {3})) == 3);
    CHECK_THROWS_AS(c_independence_witness(path_graph(3), VertexSet(3)), std::invalid_argument);
}

TEST_CASE("E-independence examples") {
    // Any 2-set is E-independent with the lowest member as pivot.
    for (const Graph& g : {path_graph(5), cycle_graph(6), complete_graph(4)}) {
        auto cert = e_independence(g, VertexSet(g.vertex_count(), {1, 3}));
        REQUIRE(cert.has_value());
        CHECK(cert->pivot == 1);
        CHECK(cert->anti_pivot == 3);
        CHECK(oracles::certificate_valid(g, *cert));
    }

    CHECK_FALSE(e_independence(complete_graph(3), VertexSet::full(3)).has_value());

    // C_{4,1}: cycle 0-1-2-3, pendant 4 on 0.
    Graph c41 = cycle_with_pendant(5);
    auto cert = e_independence(c41, VertexSet(5, {0, 1, 2, 4}));
    REQUIRE(cert.has_value());
    CHECK(cert->pivot == 4);
    CHECK(cert->anti_pivot == 3);
    CHECK(oracles::certificate_valid(c41, *cert));

    // Singletons are E-independent with no pivot.
    auto single = e_independence(path_graph(3), VertexSet(3, {1}));
    REQUIRE(single.has_value());
    CHECK_FALSE(single->pivot.has_value());
}

TEST_CASE("exact solver examples") {
    CHECK(exchange_number_exact(cycle_graph(7)).value == 2);
    CHECK(exchange_number_exact(unicyclic(3, {0})).value == 3);
    CHECK(exchange_number_exact(complete_graph(1)).value == 1);
    CHECK_THROWS_AS(exchange_number_exact(Graph(3, {{0, 1}})), std::invalid_argument);

    auto r = exchange_number_exact(cycle_with_pendant(5));
    CHECK(r.value == 4);
    CHECK(r.method == "exact");
    CHECK(oracles::certificate_valid(cycle_with_pendant(5), r.certificate));
}

TEST_CASE("brute oracle examples") {
    CHECK(exchange_number_brute(path_graph(5)) == 2);
    CHECK(exchange_number_brute(complete_graph(4)) == 2);
    CHECK(exchange_number_brute(cycle_with_pendant(5)) == 4);
    CHECK_THROWS_AS(exchange_number_brute(path_graph(13)), std::invalid_argument);
}

TEST_CASE("exact equals brute on small graphs") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : oracles::all_connected_graphs(n)) {
            auto r = exchange_number_exact(g);
            CHECK(r.value == exchange_number_brute(g));
            CHECK(oracles::certificate_valid(g, r.certificate));
        }
    std::mt19937 rng(41);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = oracles::random_connected_graph(
            std::uniform_int_distribution<int>(6, 7)(rng), rng);
        CHECK(exchange_number_exact(g).value == exchange_number_brute(g));
    }
}

TEST_CASE("find / exists queries agree with the exact value") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracles::random_connected_graph(
            std::uniform_int_distribution<int>(2, 8)(rng), rng);
        int value = exchange_number_exact(g).value;
        auto at_value = find_e_independent_of_size(g, value);
        REQUIRE(at_value.has_value());
        CHECK(oracles::certificate_valid(g, *at_value));
        CHECK_FALSE(find_e_independent_of_size(g, value + 1).has_value());
        CHECK(exists_e_independent_at_least(g, value, 1'000'000'000) == true);
        CHECK(exists_e_independent_at_least(g, value + 1, 1'000'000'000) == false);
    }
    // Exhausted budgets report no answer rather than a guess.
    Graph grid = cycle_with_pendant(9);
    CHECK_FALSE(exists_e_independent_at_least(grid, 3, 1).has_value());
}

TEST_CASE("Lemma 3.1 and 3.2 properties of found sets") {
    std::mt19937 rng(47);
    int independent_hits = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int n = std::uniform_int_distribution<int>(3, 9)(rng);
        Graph g = oracles::random_connected_graph(n, rng);
        VertexSet s = oracles::random_subset(n, rng);
        if (s.count() < 2) continue;
        auto cert = e_independence(g, s);
        if (!cert) continue;
        ++independent_hits;
        CHECK(oracles::certificate_valid(g, *cert));

        // Lemma 3.1(a,b): at most one redundant vertex; when one exists it is
        // the unique valid pivot.
        VertexSet redundant = redundant_vertices(g, s);
        CHECK(redundant.count() <= 1);
        auto pivots = oracles::all_pivots(g, s);
        CHECK(!pivots.empty());
        if (redundant.count() == 1) {
            CHECK(pivots.size() == 1);
            CHECK(pivots[0] == redundant.first());
        }

        // Lemma 3.1(e): deleting the pivot leaves a C-independent set.
        VertexSet rest = s.minus(*cert->pivot);
        CHECK(c_independence_witness(g, rest).has_value());
        // Lemma 3.2(b): the hull of the rest induces a connected subgraph.
        CHECK(connected_components(g, hull_set_of(g, rest)).size() == 1);

        if (s.count() >= 3) check_lemma_shape(g, s);
    }
    CHECK(independent_hits >= 100);
}

TEST_CASE("Remark 4.2: independent sets of size >= 3 are E-dependent") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : oracles::all_connected_graphs(n))
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                VertexSet s = oracles::mask_to_set(n, mask);
                if (s.count() >= 3 && !induces_edge(g, s))
                    CHECK_FALSE(e_independence(g, s).has_value());
            }
    std::mt19937 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracles::random_connected_graph(7, rng);
        VertexSet s = oracles::random_subset(7, rng);
        if (s.count() >= 3 && !induces_edge(g, s))
            CHECK_FALSE(e_independence(g, s).has_value());
    }
}

}  // TEST_SUITE
