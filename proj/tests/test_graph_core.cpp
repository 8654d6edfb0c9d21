#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

#include "cycc/blocks.hpp"
#include "cycc/chordal.hpp"
#include "cycc/generators.hpp"
#include "cycc/graph.hpp"
#include "cycc/io.hpp"
#include "cycc/products.hpp"

using namespace cycc;

namespace {

bool is_cycle_of_length(const Graph& g, int n) {
    if (g.vertex_count() != n || g.edge_count() != n) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return g.is_connected();
}

bool is_complete_graph(const Graph& g) {
    int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace

TEST_SUITE("graph_core") {

TEST_CASE("neighbors on basic families") {
    CHECK(path_graph(3).neighbors(1) == VertexSet(3, {0, 2}));
    CHECK(complete_graph(3).neighbors(0) == VertexSet(3, {1, 2}));
    CHECK(cycle_graph(4).neighbors(0) == VertexSet(4, {1, 3}));
}

TEST_CASE("connected_components of induced subgraphs") {
    Graph c4 = cycle_graph(4);
    auto comps = connected_components(c4, VertexSet(4, {0, 2}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet(4, {0}));
    CHECK(comps[1] == VertexSet(4, {2}));

    comps = connected_components(c4, VertexSet(4, {0, 1, 2}));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == VertexSet(4, {0, 1, 2}));

    CHECK(connected_components(c4, VertexSet(4)).empty());
}

TEST_CASE("block decomposition examples") {
    // Bowtie: triangles {0,1,2} and {2,3,4} sharing vertex 2.
    Graph bowtie = chordal_chain({complete_graph(3), complete_graph(3)});
    auto bd = block_decomposition(bowtie);
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.cut_vertices == VertexSet(5, {2}));
    CHECK(bd.is_end_block(0));
    CHECK(bd.is_end_block(1));

    auto p4 = block_decomposition(path_graph(4));
    CHECK(p4.blocks.size() == 3);
    CHECK(p4.cut_vertices.count() == 2);

    auto c5 = block_decomposition(cycle_graph(5));
    CHECK(c5.blocks.size() == 1);
    CHECK(c5.cut_vertices.empty());

    CHECK_THROWS_AS(block_decomposition(Graph(2, {})), std::invalid_argument);
}

TEST_CASE("block decomposition invariants vs deletion oracle on random graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 10)(rng);
        Graph g = oracles::random_connected_graph(n, rng);
        auto bd = block_decomposition(g);

        // Every edge lies in exactly one block.
        for (auto [u, v] : g.edges()) {
            int owners = 0;
            for (const auto& b : bd.blocks)
                if (b.contains(u) && b.contains(v)) ++owners;
            CHECK(owners == 1);
        }

        // A vertex lies in >= 2 blocks iff it is a cut vertex, and the
        // reported cut vertices match the vertex-deletion oracle.
        for (int v = 0; v < n; ++v) {
            int memberships = 0;
            for (const auto& b : bd.blocks)
                if (b.contains(v)) ++memberships;
            CHECK((memberships >= 2) == bd.cut_vertices.contains(v));
            CHECK(bd.cut_vertices.contains(v) == oracles::cut_vertex_oracle(g, v));
        }

        // Each block is K_2 or 2-connected as an induced subgraph.
        for (const auto& b : bd.blocks)
            CHECK((b.count() == 2 || oracles::two_connected_oracle(g, b)));

        // The block-cut tree is a tree: connected with nodes-1 edges.
        std::size_t nodes = bd.tree_adj.size();
        std::size_t degree_sum = 0;
        for (const auto& adj : bd.tree_adj) degree_sum += adj.size();
        CHECK(degree_sum == 2 * (nodes - 1));
        std::vector<char> seen(nodes, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : bd.tree_adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        CHECK(reached == nodes);
    }
}

TEST_CASE("chordality examples and oracle agreement") {
    CHECK_FALSE(is_chordal(cycle_graph(4)));
    CHECK(is_chordal(complete_graph(4)));
    CHECK(is_chordal(chordal_chain({complete_graph(3), complete_graph(3)})));

    // A perfect elimination ordering witness is returned for chordal inputs.
    Graph bowtie = chordal_chain({complete_graph(3), complete_graph(3)});
    auto peo = perfect_elimination_ordering(bowtie);
    REQUIRE(peo.has_value());
    CHECK(peo->size() == 5);

    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : oracles::all_connected_graphs(n))
            CHECK(is_chordal(g) == oracles::chordal_oracle(g));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = oracles::random_connected_graph(7, rng);
        CHECK(is_chordal(g) == oracles::chordal_oracle(g));
    }
}

TEST_CASE("products of K_2") {
    Graph k2 = complete_graph(2);
    CHECK(is_cycle_of_length(product(k2, k2, ProductKind::Cartesian), 4));
    CHECK(is_complete_graph(product(k2, k2, ProductKind::Strong)));
    CHECK(is_complete_graph(product(k2, k2, ProductKind::Lexicographic)));
}

TEST_CASE("product edges match the definition on small factor pairs") {
    std::vector<Graph> pool;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : oracles::all_connected_graphs(n)) pool.push_back(g);
    pool.push_back(path_graph(5));
    pool.push_back(cycle_graph(5));
    pool.push_back(complete_graph(5));

    for (const Graph& g : pool)
        for (const Graph& h : pool) {
            Graph cart = product(g, h, ProductKind::Cartesian);
            Graph strong = product(g, h, ProductKind::Strong);
            Graph lex = product(g, h, ProductKind::Lexicographic);
            CHECK(cart.vertex_count() == g.vertex_count() * h.vertex_count());
            CHECK(cart.edge_count() == g.edge_count() * h.vertex_count() +
                                           h.edge_count() * g.vertex_count());
            CHECK(strong.edge_count() == cart.edge_count() + 2 * g.edge_count() * h.edge_count());

            // Definition-based adjacency for every vertex pair.
            for (int a = 0; a < cart.vertex_count(); ++a)
                for (int b = a + 1; b < cart.vertex_count(); ++b) {
                    auto [g1, h1] = product_coords(g, h, a);
                    auto [g2, h2] = product_coords(g, h, b);
                    bool ge = g.has_edge(g1, g2), he = h.has_edge(h1, h2);
                    bool cart_def = (ge && h1 == h2) || (g1 == g2 && he);
                    bool strong_def = cart_def || (ge && he);
                    bool lex_def = ge || (g1 == g2 && he);
                    CHECK(cart.has_edge(a, b) == cart_def);
                    CHECK(strong.has_edge(a, b) == strong_def);
                    CHECK(lex.has_edge(a, b) == lex_def);
                }
        }
}

TEST_CASE("generators") {
    Graph c41 = cycle_with_pendant(5);
    CHECK(c41.vertex_count() == 5);
    CHECK(c41.edge_count() == 5);
    CHECK(c41.degree(4) == 1);

    CHECK(complete_multipartite({2, 3}).edge_count() == 6);

    Graph bowtie = chordal_chain({complete_graph(3), complete_graph(3)});
    CHECK(bowtie.vertex_count() == 5);
    CHECK(bowtie.edge_count() == 6);
    CHECK(block_decomposition(bowtie).blocks.size() == 2);

    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(chordal_chain({path_graph(3)}), std::invalid_argument);
}

TEST_CASE("diameter") {
    CHECK(diameter(complete_graph(5)) == 1);
    CHECK(diameter(path_graph(4)) == 3);
    CHECK(diameter(cycle_graph(6)) == 3);
    CHECK_THROWS_AS(diameter(Graph(2, {})), std::invalid_argument);
}

TEST_CASE("edge list round trip and parse errors") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_connected_graph(
            std::uniform_int_distribution<int>(1, 9)(rng), rng);
        std::ostringstream out;
        write_edge_list(out, g);
        std::istringstream in(out.str());
        Graph back = read_edge_list(in);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }

    std::istringstream commented("# a comment\n3 2\n0 1\n# another\n1 2\n");
    Graph g = read_edge_list(commented);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);

    std::istringstream bad_header("not a header\n");
    CHECK_THROWS_AS(read_edge_list(bad_header), std::runtime_error);
    std::istringstream out_of_range("2 1\n0 5\n");
    CHECK_THROWS(read_edge_list(out_of_range));
    std::istringstream truncated("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(truncated), std::runtime_error);
}

}  // TEST_SUITE
