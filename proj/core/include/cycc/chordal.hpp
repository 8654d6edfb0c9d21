#ifndef CYCC_CHORDAL_HPP
#define CYCC_CHORDAL_HPP

#include <optional>
#include <vector>

#include "cycc/graph.hpp"

namespace cycc {

// Perfect elimination ordering when g is chordal (candidate order from
// maximum cardinality search, ties broken lowest-id-first), nullopt otherwise.
std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g);

inline bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

}  // namespace cycc

#endif
