#ifndef CYCC_GENERATORS_HPP
#define CYCC_GENERATORS_HPP

#include <vector>

#include "cycc/graph.hpp"

namespace cycc {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// K_{m1,...,mk}; parts are the class sizes.
Graph complete_multipartite(const std::vector<int>& parts);

// C_{(n-1),1}: cycle on vertices 0..n-2 plus pendant vertex n-1 attached to 0.
Graph cycle_with_pendant(int n);

// Cycle 0..m-1; extra vertex m+j attached to parents[j] (< m+j), forming trees
// hanging off the cycle.
Graph unicyclic(int m, const std::vector<int>& parents);

// Glues consecutive blocks at one shared vertex so the block-cut tree is a
// path: block i's vertex (n_i - 1) is identified with block i+1's vertex 0.
// Each supplied block must be K_2 or 2-connected.
Graph chordal_chain(const std::vector<Graph>& blocks);

// Join: disjoint union of g and h plus all edges between them (h's ids are
// shifted by |V(g)|).
Graph join(const Graph& g, const Graph& h);

}  // namespace cycc

#endif
