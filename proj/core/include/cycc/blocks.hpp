#ifndef CYCC_BLOCKS_HPP
#define CYCC_BLOCKS_HPP

#include <vector>

#include "cycc/graph.hpp"

namespace cycc {

// Blocks (maximal 2-connected subgraphs, bridges counted as K_2 blocks),
// cut vertices, and the bipartite block-cut tree of a connected graph.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;

    // Tree nodes: 0..blocks.size()-1 are blocks, blocks.size()+i is the i-th
    // cut vertex (in increasing id order, see cut_vertex_list).
    std::vector<int> cut_vertex_list;
    std::vector<std::vector<int>> tree_adj;

    bool is_end_block(std::size_t b) const {
        return blocks[b].intersection_count(cut_vertices) == 1;
    }
};

// Throws on disconnected or empty input.
BlockDecomposition block_decomposition(const Graph& g);

}  // namespace cycc

#endif
