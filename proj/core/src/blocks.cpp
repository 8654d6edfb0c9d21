#include "cycc/blocks.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycc {

namespace {

struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<VertexSet> blocks;
    VertexSet cuts;
    int timer = 0;

    explicit BlockDfs(const Graph& graph)
        : g(graph),
          disc(graph.vertex_count(), -1),
          low(graph.vertex_count(), 0),
          cuts(graph.vertex_count()) {}

    void pop_block(std::pair<int, int> until) {
        VertexSet block(g.vertex_count());
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
            if (e == until) break;
        }
        blocks.push_back(std::move(block));
    }

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        g.neighbors(u).for_each([&](int v) {
            if (v == parent) return;
            if (disc[v] < 0) {
                ++children;
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent >= 0 || children > 1) cuts.insert(u);
                    pop_block({u, v});
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        });
    }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    if (g.vertex_count() == 0 || !g.is_connected())
        throw std::invalid_argument("block_decomposition: graph must be connected and nonempty");

    BlockDecomposition out;
    if (g.vertex_count() == 1) {
        out.blocks.push_back(VertexSet(1, {0}));
        out.cut_vertices = VertexSet(1);
        out.tree_adj.assign(1, {});
        return out;
    }

    BlockDfs dfs(g);
    dfs.dfs(0, -1);
    out.blocks = std::move(dfs.blocks);
    out.cut_vertices = dfs.cuts;

    // Deterministic block order: by lowest member, then by size.
    std::sort(out.blocks.begin(), out.blocks.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.first() != b.first()) return a.first() < b.first();
        return a.count() < b.count();
    });

    out.cut_vertex_list = out.cut_vertices.to_vector();
    std::vector<int> cut_node(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < out.cut_vertex_list.size(); ++i)
        cut_node[out.cut_vertex_list[i]] = static_cast<int>(out.blocks.size() + i);

    out.tree_adj.assign(out.blocks.size() + out.cut_vertex_list.size(), {});
    for (std::size_t b = 0; b < out.blocks.size(); ++b) {
        (out.blocks[b] & out.cut_vertices).for_each([&](int c) {
            out.tree_adj[b].push_back(cut_node[c]);
            out.tree_adj[cut_node[c]].push_back(static_cast<int>(b));
        });
    }
    return out;
}

}  // namespace cycc
