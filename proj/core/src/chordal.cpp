#include "cycc/chordal.hpp"

#include <algorithm>

namespace cycc {

std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(n, 0);
    std::vector<bool> numbered(n, false);
    std::vector<int> order;  // filled back to front
    order.reserve(n);

    // Maximum cardinality search; yields a reverse PEO iff g is chordal.
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
        numbered[pick] = true;
        order.push_back(pick);
        g.neighbors(pick).for_each([&](int u) {
            if (!numbered[u]) ++weight[u];
        });
    }
    std::reverse(order.begin(), order.end());

    // Verify: for each vertex, its later neighbors must form a clique.
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        VertexSet later(n);
        g.neighbors(v).for_each([&](int u) {
            if (pos[u] > i) later.insert(u);
        });
        // The earliest later-neighbor must be adjacent to the rest.
        int w = -1;
        later.for_each([&](int u) {
            if (w < 0 || pos[u] < pos[w]) w = u;
        });
        if (w < 0) continue;
        later.erase(w);
        if (!later.is_subset_of(g.neighbors(w))) return std::nullopt;
    }
    return order;
}

}  // namespace cycc
