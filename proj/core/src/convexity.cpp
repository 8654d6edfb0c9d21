#include "cycc/convexity.hpp"

namespace cycc {

namespace {

// Adds to out all vertices outside s with two s-neighbors in one component of
// G[s]; returns whether anything was added.
bool infect_step(const Graph& g, const VertexSet& s, VertexSet& out) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    auto comps = connected_components(g, s);
    for (std::size_t c = 0; c < comps.size(); ++c)
        comps[c].for_each([&](int v) { comp[v] = static_cast<int>(c); });

    bool added = false;
    std::vector<int> mark(comps.size(), -1);
    for (int v = 0; v < n; ++v) {
        if (s.contains(v)) continue;
        bool infected = false;
        (g.neighbors(v) & s).for_each([&](int u) {
            int c = comp[u];
            if (mark[c] == v)
                infected = true;
            else
                mark[c] = v;
        });
        if (infected) {
            out.insert(v);
            added = true;
        }
    }
    return added;
}

}  // namespace

VertexSet interval(const Graph& g, const VertexSet& s) {
    VertexSet out = s;
    infect_step(g, s, out);
    return out;
}

HullTrace hull(const Graph& g, const VertexSet& s) {
    HullTrace trace;
    trace.rounds.push_back(s);
    VertexSet cur = s;
    while (true) {
        VertexSet next = cur;
        if (!infect_step(g, cur, next)) break;
        trace.rounds.push_back(next);
        cur = next;
    }
    trace.final = cur;
    return trace;
}

VertexSet hull_set_of(const Graph& g, const VertexSet& s) {
    VertexSet cur = s;
    while (true) {
        VertexSet next = cur;
        if (!infect_step(g, cur, next)) return cur;
        cur = next;
    }
}

bool is_convex(const Graph& g, const VertexSet& s) { return interval(g, s) == s; }

bool is_hull_set(const Graph& g, const VertexSet& s) {
    return hull_set_of(g, s) == g.vertices();
}

VertexSet redundant_vertices(const Graph& g, const VertexSet& s) {
    VertexSet out(g.vertex_count());
    s.for_each([&](int w) {
        if (hull_set_of(g, s.minus(w)).contains(w)) out.insert(w);
    });
    return out;
}

}  // namespace cycc
