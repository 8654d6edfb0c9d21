#ifndef CYCC_FORMULAS_HPP
#define CYCC_FORMULAS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cycc/graph.hpp"
#include "cycc/independence.hpp"
#include "cycc/products.hpp"

namespace cycc {

// ---- class recognizers ----

bool is_tree(const Graph& g);
bool is_cycle_shape(const Graph& g);
bool is_complete(const Graph& g);
bool is_complete_multipartite(const Graph& g);
int universal_vertex_count(const Graph& g);

// Vertex set of the unique cycle when g is connected unicyclic, else nullopt.
std::optional<VertexSet> unicyclic_cycle(const Graph& g);

// K_3, P_3, or an (n-1)-cycle with one pendant vertex.
bool is_exchange_n_minus_1(const Graph& g);

// ---- block chain structure and block properties ----

struct ChainStructure {
    std::vector<VertexSet> blocks_in_order;  // chain order when is_single_chain
    bool is_single_chain = false;
    int longest_non_k2_chain_length = 0;
    bool has_k2_blocks = false;
};

ChainStructure chain_structure(const Graph& g);

struct EdgeVertexWitness {
    int u, v, x;  // edge uv and vertex x, block-internal distances >= 2
};

struct VertexSeparationWitness {
    int x, y, c;  // x in N(c) for cut vertex c, y outside C(G), N(c), N(x)
};

// Throws when block is not K_2 or 2-connected as an induced subgraph.
std::optional<EdgeVertexWitness> edge_vertex_property(const Graph& g, const VertexSet& block);

std::optional<VertexSeparationWitness> vertex_separation_property(const Graph& g,
                                                                  const VertexSet& block);

struct BlockProperties {
    VertexSet block;
    bool is_end_block = false;
    std::optional<EdgeVertexWitness> edge_vertex;
    std::optional<VertexSeparationWitness> vertex_separation;
};

std::vector<BlockProperties> block_property_report(const Graph& g);

// ---- closed-form evaluators ----

// First matching rule in fixed precedence (remarks, unicyclic, chordal
// chains); nullopt when no hypothesis applies.
std::optional<ExchangeResult> exchange_formula(const Graph& g);

// Formula when one applies, otherwise the exact solver (rejecting graphs
// above exact_cap vertices).
ExchangeResult exchange_auto(const Graph& g, int exact_cap = 20);

struct ProductExchange {
    enum class Kind { Exact, LowerBound, NotApplicable };
    Kind kind = Kind::NotApplicable;
    int value = 0;
    std::string tag;
    std::optional<ExchangeCertificate> certificate;
};

ProductExchange product_exchange(const Graph& g, const Graph& h, ProductKind kind);

}  // namespace cycc

#endif
