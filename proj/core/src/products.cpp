#include "cycc/products.hpp"

#include <stdexcept>
#include <vector>

namespace cycc {

Graph product(const Graph& g, const Graph& h, ProductKind kind) {
    if (g.vertex_count() < 1 || h.vertex_count() < 1)
        throw std::invalid_argument("product: factors must be nonempty");

    const int hn = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int g1 = 0; g1 < g.vertex_count(); ++g1)
        for (int h1 = 0; h1 < hn; ++h1)
            for (int g2 = g1; g2 < g.vertex_count(); ++g2)
                for (int h2 = 0; h2 < hn; ++h2) {
                    if (g2 == g1 && h2 <= h1) continue;
                    bool ga = g.has_edge(g1, g2), he = h.has_edge(h1, h2);
                    bool geq = g1 == g2, heq = h1 == h2;
                    bool adjacent = false;
                    switch (kind) {
                        case ProductKind::Cartesian:
                            adjacent = (ga && heq) || (geq && he);
                            break;
                        case ProductKind::Strong:
                            adjacent = (ga && heq) || (geq && he) || (ga && he);
                            break;
                        case ProductKind::Lexicographic:
                            adjacent = ga || (geq && he);
                            break;
                    }
                    if (adjacent) edges.emplace_back(g1 * hn + h1, g2 * hn + h2);
                }
    return Graph(g.vertex_count() * hn, edges);
}

}  // namespace cycc
