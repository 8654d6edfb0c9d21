#ifndef CYCC_GRAPH_HPP
#define CYCC_GRAPH_HPP

#include <utility>
#include <vector>

#include "cycc/vertex_set.hpp"

namespace cycc {

// Immutable simple undirected graph over vertex ids 0..n-1.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const VertexSet& neighbors(int v) const;
    int degree(int v) const { return neighbors(v).count(); }
    bool has_edge(int u, int v) const { return neighbors(u).contains(v); }

    VertexSet vertices() const { return VertexSet::full(n_); }

    // Edges as (min, max) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// Components of the subgraph induced by s, each reported as a VertexSet,
// ordered by lowest member.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s);

// BFS distances from source inside the subgraph induced by within;
// -1 marks unreachable vertices (and vertices outside within).
std::vector<int> bfs_distances(const Graph& g, int source, const VertexSet& within);

// Max shortest-path distance over all pairs; throws on disconnected input.
int diameter(const Graph& g);

}  // namespace cycc

#endif
