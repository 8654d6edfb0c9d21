#ifndef CYCC_CONVEXITY_HPP
#define CYCC_CONVEXITY_HPP

#include <vector>

#include "cycc/graph.hpp"

namespace cycc {

// Synchronous closure iterates of the interval operator: rounds[0] is the
// seed set, each later round is strictly larger, rounds.back() == final.
struct HullTrace {
    std::vector<VertexSet> rounds;
    VertexSet final;
};

// One interval step: s plus every outside vertex with two neighbors in the
// same connected component of the subgraph induced by s.
VertexSet interval(const Graph& g, const VertexSet& s);

HullTrace hull(const Graph& g, const VertexSet& s);

// Closure without the per-round trace.
VertexSet hull_set_of(const Graph& g, const VertexSet& s);

bool is_convex(const Graph& g, const VertexSet& s);
bool is_hull_set(const Graph& g, const VertexSet& s);

// Members w of s with w in hull(s minus w).
VertexSet redundant_vertices(const Graph& g, const VertexSet& s);

}  // namespace cycc

#endif
