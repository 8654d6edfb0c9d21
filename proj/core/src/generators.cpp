#include "cycc/generators.hpp"

#include <stdexcept>

namespace cycc {

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n >= 1 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n >= 1 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("complete_multipartite: >= 2 parts required");
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1) throw std::invalid_argument("complete_multipartite: empty part");
        for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
        n += parts[p];
    }
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph cycle_with_pendant(int n) {
    if (n < 4) throw std::invalid_argument("cycle_with_pendant: n >= 4 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n - 1; ++i) e.emplace_back(i, (i + 1) % (n - 1));
    e.emplace_back(0, n - 1);
    return Graph(n, e);
}

Graph unicyclic(int m, const std::vector<int>& parents) {
    if (m < 3) throw std::invalid_argument("unicyclic: cycle length >= 3 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
    for (std::size_t j = 0; j < parents.size(); ++j) {
        int v = m + static_cast<int>(j);
        if (parents[j] < 0 || parents[j] >= v)
            throw std::invalid_argument("unicyclic: attachment parent must precede vertex");
        e.emplace_back(parents[j], v);
    }
    return Graph(m + static_cast<int>(parents.size()), e);
}

namespace {

bool two_connected_or_k2(const Graph& b) {
    int n = b.vertex_count();
    if (n < 2 || !b.is_connected()) return false;
    if (n == 2) return b.edge_count() == 1;
    for (int v = 0; v < n; ++v) {
        VertexSet rest = b.vertices();
        rest.erase(v);
        if (connected_components(b, rest).size() != 1) return false;
    }
    return true;
}

}  // namespace

Graph chordal_chain(const std::vector<Graph>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("chordal_chain: no blocks");
    for (const Graph& b : blocks)
        if (!two_connected_or_k2(b))
            throw std::invalid_argument("chordal_chain: each block must be K_2 or 2-connected");

    std::vector<std::pair<int, int>> e;
    int offset = 0;  // id of this block's left glue vertex
    int n = 0;
    for (const Graph& b : blocks) {
        // Block-local vertex k maps to offset + k; the next block reuses the
        // rightmost vertex as its vertex 0.
        for (auto [u, v] : b.edges()) e.emplace_back(offset + u, offset + v);
        n = offset + b.vertex_count();
        offset = n - 1;
    }
    return Graph(n, e);
}

Graph join(const Graph& g, const Graph& h) {
    int gn = g.vertex_count();
    std::vector<std::pair<int, int>> e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(gn + u, gn + v);
    for (int u = 0; u < gn; ++u)
        for (int v = 0; v < h.vertex_count(); ++v) e.emplace_back(u, gn + v);
    return Graph(gn + h.vertex_count(), e);
}

}  // namespace cycc
