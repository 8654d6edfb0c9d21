#ifndef CYCC_IO_HPP
#define CYCC_IO_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "cycc/graph.hpp"

namespace cycc {

// Edge-list format: optional '#' comment lines, a header "n m", then m lines
// "u v" with 0-based endpoints. Throws std::runtime_error on malformed input.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Writes the same format with edges as (min, max) pairs in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);

// 3-CNF formula: 1-based variables, negative literal = negated variable.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;

    // Throws std::invalid_argument unless every clause has three in-range
    // nonzero literals and there are at least two clauses.
    void validate() const;
};

// DIMACS CNF: 'c' comments, "p cnf <vars> <clauses>" header, clauses of
// exactly three literals each terminated by 0. Throws std::runtime_error on
// malformed input and std::invalid_argument on formulas outside the 3-CNF
// m >= 2 fragment.
CnfFormula read_dimacs_cnf(std::istream& in);
CnfFormula read_dimacs_cnf_file(const std::string& path);

}  // namespace cycc

#endif
