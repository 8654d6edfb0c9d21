#ifndef CYCC_CORPUS_HPP
#define CYCC_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cycc/graph.hpp"

namespace cycc {

struct CorpusEntry {
    std::string name;
    Graph graph;
    std::optional<int> expected;  // closed-form value when the class pins one
    std::string source;           // family tag
};

// Named gadget blocks for chordal chains: K_2, K_3, K_4, the diamond
// (neither property) and the 5-vertex fan (edge-vertex property).
const std::vector<std::string>& chain_gadget_names();
Graph chain_gadget(const std::string& name);

// Deterministic corpus for a family in {cycles, trees, complete,
// multipartite, universal, unicyclic, pendant, chordal-chains, products,
// all}. Throws std::invalid_argument on unknown family names.
std::vector<CorpusEntry> corpus_generate(const std::string& family, int max_blocks,
                                         unsigned seed);

}  // namespace cycc

#endif
