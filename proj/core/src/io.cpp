#include "cycc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cycc {

namespace {

// Next line that is neither blank nor a comment starting with `comment`.
bool next_data_line(std::istream& in, char comment, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == comment) continue;
        return true;
    }
    return false;
}

[[noreturn]] void malformed(const std::string& what) {
    throw std::runtime_error("parse error: " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, '#', line)) malformed("missing edge-list header");
    std::istringstream header(line);
    int n = 0, m = 0;
    if (!(header >> n >> m) || n < 0 || m < 0) malformed("bad edge-list header: " + line);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!next_data_line(in, '#', line)) malformed("expected " + std::to_string(m) + " edges");
        std::istringstream es(line);
        int u = 0, v = 0;
        if (!(es >> u >> v)) malformed("bad edge line: " + line);
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);  // validates ranges and self-loops
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void CnfFormula::validate() const {
    if (clauses.size() < 2) throw std::invalid_argument("cnf: at least two clauses required");
    if (num_vars < 1) throw std::invalid_argument("cnf: at least one variable required");
    for (const auto& clause : clauses)
        for (int lit : clause) {
            int var = lit < 0 ? -lit : lit;
            if (var < 1 || var > num_vars)
                throw std::invalid_argument("cnf: literal out of range");
        }
}

CnfFormula read_dimacs_cnf(std::istream& in) {
    std::string line;
    if (!next_data_line(in, 'c', line)) malformed("missing DIMACS header");
    std::istringstream header(line);
    std::string p, fmt;
    CnfFormula phi;
    int num_clauses = 0;
    if (!(header >> p >> fmt >> phi.num_vars >> num_clauses) || p != "p" || fmt != "cnf")
        malformed("bad DIMACS header: " + line);

    std::vector<int> lits;
    int lit = 0;
    while (in >> lit) {
        if (lit == 0) {
            if (lits.size() != 3) malformed("clause must have exactly three literals");
            phi.clauses.push_back({lits[0], lits[1], lits[2]});
            lits.clear();
        } else {
            lits.push_back(lit);
        }
    }
    if (!lits.empty()) malformed("clause not terminated by 0");
    if (static_cast<int>(phi.clauses.size()) != num_clauses)
        malformed("clause count does not match header");
    phi.validate();
    return phi;
}

CnfFormula read_dimacs_cnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_dimacs_cnf(in);
}

}  // namespace cycc
