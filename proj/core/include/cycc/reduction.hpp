#ifndef CYCC_REDUCTION_HPP
#define CYCC_REDUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "cycc/graph.hpp"
#include "cycc/io.hpp"

namespace cycc {

// One opposite-literal occurrence pair: position p of clause i against
// position q of clause j (all 0-based, i < j). Each pair owns a fresh
// 4-vertex gadget.
struct OppositePair {
    int i, p, j, q;
};

struct ReductionOutput {
    Graph graph;
    int k = 0;  // 2m + 1
    int num_clauses = 0;
    std::vector<std::string> labels;    // per vertex id
    std::vector<OppositePair> pairs;    // in enumeration order

    VertexSet role_a, role_b, role_c, role_d, role_w, role_z;

    // Fixed layout: clause i occupies ids [12i, 12i+12): c_i, then the three
    // literal triangles, then w_i, w_i'. After the clauses come d, z, z',
    // then one 4-vertex gadget per pair.
    int clause_vertex(int i) const { return 12 * i; }
    int triangle_vertex(int i, int p, int sub) const { return 12 * i + 1 + 3 * p + (sub - 1); }
    int w_vertex(int i, bool prime) const { return 12 * i + 10 + (prime ? 1 : 0); }
    int d_vertex() const { return 12 * num_clauses; }
    int z_vertex(bool prime) const { return 12 * num_clauses + 1 + (prime ? 1 : 0); }
    int pair_vertex(int t, int sub) const { return 12 * num_clauses + 3 + 4 * t + sub; }
};

// Theorem-style reduction graph from a 3-CNF formula; throws on invalid phi.
ReductionOutput build_reduction(const CnfFormula& phi);

// Brute-force 5-clique search.
bool is_k5_free(const Graph& g);

struct VerifyLimits {
    long long node_budget = 200'000'000;
};

enum class Verdict { Consistent, Inconsistent, Timeout };

struct VerifyReport {
    Verdict verdict = Verdict::Timeout;
    bool satisfiable = false;
    std::optional<std::vector<bool>> assignment;   // 1-based var -> value
    std::optional<bool> solver_answer;             // empty on budget exhaustion
    bool k5_free = false;

    // Forward-direction proof checks, present only when satisfiable.
    std::optional<VertexSet> forward_witness;
    bool forward_pivot_z = false;    // z is a valid pivot of the witness
    bool forward_hull_matches = false;  // hull(S \ z) equals the predicted H
    bool degree_sanity = false;      // every vertex outside H has <= 1 neighbor in H
};

// Checks SAT(phi) (truth-table) against "exists E-independent set of size
// >= k" on the reduction graph, plus the construction's structural claims.
VerifyReport verify_reduction(const CnfFormula& phi, const VerifyLimits& limits = {});

}  // namespace cycc

#endif
