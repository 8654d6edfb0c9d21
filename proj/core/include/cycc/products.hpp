#ifndef CYCC_PRODUCTS_HPP
#define CYCC_PRODUCTS_HPP

#include <utility>

#include "cycc/graph.hpp"

namespace cycc {

enum class ProductKind { Cartesian, Strong, Lexicographic };

// Vertex (gi, hj) of a product is flattened g-major: gi * |V(h)| + hj.
inline int product_vertex(const Graph& /*g*/, const Graph& h, int gi, int hj) {
    return gi * h.vertex_count() + hj;
}

inline std::pair<int, int> product_coords(const Graph& /*g*/, const Graph& h, int flat) {
    return {flat / h.vertex_count(), flat % h.vertex_count()};
}

Graph product(const Graph& g, const Graph& h, ProductKind kind);

}  // namespace cycc

#endif
