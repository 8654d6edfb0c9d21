#ifndef CYCC_INDEPENDENCE_HPP
#define CYCC_INDEPENDENCE_HPP

#include <optional>
#include <string>

#include "cycc/graph.hpp"

namespace cycc {

// E-independent set with the pivot/anti-pivot pair witnessing independence.
// pivot/anti_pivot are absent only for singleton sets, which are
// E-independent by definition.
struct ExchangeCertificate {
    VertexSet set;
    std::optional<int> pivot;
    std::optional<int> anti_pivot;
};

struct ExchangeResult {
    int value = 0;
    ExchangeCertificate certificate;
    std::string method;
};

// Lowest-id witness p in hull(s) \ union of deletion hulls; nullopt when
// C-dependent. Throws on empty s.
std::optional<int> c_independence_witness(const Graph& g, const VertexSet& s);

// Certificate with the lowest-id valid pivot and lowest-id anti-pivot;
// nullopt when s is E-dependent. Throws on empty s.
std::optional<ExchangeCertificate> e_independence(const Graph& g, const VertexSet& s);

// Exact exchange number by descending-size subset search with lemma-based
// pruning. Requires a connected graph.
ExchangeResult exchange_number_exact(const Graph& g);

// Unpruned exhaustive oracle; rejects graphs larger than cap.
int exchange_number_brute(const Graph& g, int cap = 12);

// Pruned search restricted to one cardinality.
std::optional<ExchangeCertificate> find_e_independent_of_size(const Graph& g, int k);

// Budgeted query: does an E-independent set of size >= k exist? nullopt when
// the node budget was exhausted before an answer was established.
std::optional<bool> exists_e_independent_at_least(const Graph& g, int k, long long node_budget);

}  // namespace cycc

#endif
