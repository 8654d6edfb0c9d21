#include "cycc/reduction.hpp"

#include <cstdint>
#include <stdexcept>

#include "cycc/convexity.hpp"
#include "cycc/independence.hpp"

namespace cycc {

namespace {

int literal_at(const CnfFormula& phi, int i, int p) { return phi.clauses[i][p]; }

bool literal_true(int lit, const std::vector<bool>& assignment) {
    int var = lit < 0 ? -lit : lit;
    return assignment[var] == (lit > 0);
}

}  // namespace

ReductionOutput build_reduction(const CnfFormula& phi) {
    phi.validate();
    const int m = static_cast<int>(phi.clauses.size());

    std::vector<OppositePair> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q)
                    if (literal_at(phi, i, p) == -literal_at(phi, j, q))
                        pairs.push_back({i, p, j, q});

    const int n = 12 * m + 3 + 4 * static_cast<int>(pairs.size());

    // Mirror of ReductionOutput's fixed layout, usable before construction.
    auto cv = [&](int i) { return 12 * i; };
    auto tv = [&](int i, int p, int sub) { return 12 * i + 1 + 3 * p + (sub - 1); };
    auto wv = [&](int i, bool prime) { return 12 * i + 10 + (prime ? 1 : 0); };
    const int d = 12 * m, z = 12 * m + 1, zp = 12 * m + 2;
    auto pv = [&](int t, int sub) { return 12 * m + 3 + 4 * t + sub; };

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        for (int p = 0; p < 3; ++p) {
            // Triangle and its clause-vertex cone.
            for (int a = 1; a <= 3; ++a) {
                edges.emplace_back(cv(i), tv(i, p, a));
                for (int b = a + 1; b <= 3; ++b) edges.emplace_back(tv(i, p, a), tv(i, p, b));
            }
            for (bool prime : {false, true}) edges.emplace_back(wv(i, prime), tv(i, p, 1));
        }
        edges.emplace_back(wv(i, false), wv(i, true));
    }
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        const auto& [i, p, j, q] = pairs[t];
        int l4 = pv(static_cast<int>(t), 0), l5 = pv(static_cast<int>(t), 1);
        int lb4 = pv(static_cast<int>(t), 2), lb5 = pv(static_cast<int>(t), 3);
        edges.emplace_back(cv(i), l4);
        edges.emplace_back(tv(i, p, 2), l4);
        edges.emplace_back(tv(i, p, 3), l4);
        edges.emplace_back(l5, l4);
        edges.emplace_back(lb5, l4);
        edges.emplace_back(cv(j), lb4);
        edges.emplace_back(tv(j, q, 2), lb4);
        edges.emplace_back(tv(j, q, 3), lb4);
        edges.emplace_back(l5, lb4);
        edges.emplace_back(lb5, lb4);
        edges.emplace_back(l5, lb5);
    }
    edges.emplace_back(d, cv(0));
    edges.emplace_back(d, cv(m - 1));
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(cv(i), cv(i + 1));
    edges.emplace_back(z, zp);

    VertexSet role_w(n);
    for (int i = 0; i < m; ++i) {
        role_w.insert(wv(i, false));
        role_w.insert(wv(i, true));
    }
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        role_w.insert(pv(static_cast<int>(t), 1));
        role_w.insert(pv(static_cast<int>(t), 3));
    }
    role_w.for_each([&](int w) {
        edges.emplace_back(z, w);
        edges.emplace_back(zp, w);
    });

    ReductionOutput out{Graph(n, edges), 2 * m + 1, m, {}, pairs,
                        VertexSet(n), VertexSet(n), VertexSet(n),
                        VertexSet(n), role_w, VertexSet(n)};

    out.labels.assign(static_cast<std::size_t>(n), "");
    for (int i = 0; i < m; ++i) {
        out.labels[cv(i)] = "c" + std::to_string(i + 1);
        for (int p = 0; p < 3; ++p)
            for (int a = 1; a <= 3; ++a)
                out.labels[tv(i, p, a)] = "C" + std::to_string(i + 1) + ".p" +
                                          std::to_string(p + 1) + ".l" + std::to_string(a);
        out.labels[wv(i, false)] = "w" + std::to_string(i + 1);
        out.labels[wv(i, true)] = "w" + std::to_string(i + 1) + "'";
    }
    out.labels[d] = "d";
    out.labels[z] = "z";
    out.labels[zp] = "z'";
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        std::string pre = "P" + std::to_string(t + 1) + ".";
        out.labels[pv(static_cast<int>(t), 0)] = pre + "l4";
        out.labels[pv(static_cast<int>(t), 1)] = pre + "l5";
        out.labels[pv(static_cast<int>(t), 2)] = pre + "lb4";
        out.labels[pv(static_cast<int>(t), 3)] = pre + "lb5";
    }

    for (int i = 0; i < m; ++i) {
        out.role_c.insert(cv(i));
        for (int p = 0; p < 3; ++p) {
            out.role_a.insert(tv(i, p, 1));
            out.role_b.insert(tv(i, p, 2));
            out.role_b.insert(tv(i, p, 3));
        }
    }
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        out.role_a.insert(pv(static_cast<int>(t), 0));
        out.role_a.insert(pv(static_cast<int>(t), 2));
    }
    out.role_d.insert(d);
    out.role_z.insert(z);
    out.role_z.insert(zp);
    return out;
}

bool is_k5_free(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> pick;
    // Depth-5 common-neighborhood search.
    auto rec = [&](auto&& self, int next, VertexSet common, int depth) -> bool {
        if (depth == 5) return false;  // found a K_5
        for (int v = next; v < n; ++v) {
            if (!common.contains(v)) continue;
            if (!self(self, v + 1, common & g.neighbors(v), depth + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0, g.vertices(), 0);
}

VerifyReport verify_reduction(const CnfFormula& phi, const VerifyLimits& limits) {
    phi.validate();
    if (phi.num_vars > 24)
        throw std::invalid_argument("verify_reduction: truth-table side needs num_vars <= 24");
    ReductionOutput red = build_reduction(phi);
    const Graph& g = red.graph;
    const int m = red.num_clauses;

    VerifyReport rep;
    rep.k5_free = is_k5_free(g);

    // SAT side by truth-table enumeration.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << phi.num_vars); ++mask) {
        std::vector<bool> assignment(static_cast<std::size_t>(phi.num_vars) + 1);
        for (int v = 1; v <= phi.num_vars; ++v) assignment[v] = (mask >> (v - 1)) & 1;
        bool ok = true;
        for (const auto& clause : phi.clauses) {
            bool sat = false;
            for (int lit : clause) sat = sat || literal_true(lit, assignment);
            if (!sat) ok = false;
        }
        if (ok) {
            rep.satisfiable = true;
            rep.assignment = assignment;
            break;
        }
    }

    if (rep.satisfiable) {
        // Forward witness from the proof: z plus l2, l3 of one true literal
        // per clause (lowest position).
        std::vector<int> chosen(m, -1);
        VertexSet s(g.vertex_count(), {red.z_vertex(false)});
        for (int i = 0; i < m; ++i) {
            for (int p = 0; p < 3 && chosen[i] < 0; ++p)
                if (literal_true(phi.clauses[i][p], *rep.assignment)) chosen[i] = p;
            s.insert(red.triangle_vertex(i, chosen[i], 2));
            s.insert(red.triangle_vertex(i, chosen[i], 3));
        }
        rep.forward_witness = s;

        // z as pivot: its deletion hull minus the union of all others'.
        VertexSet others(g.vertex_count());
        s.for_each([&](int a) {
            if (a != red.z_vertex(false)) others |= hull_set_of(g, s.minus(a));
        });
        VertexSet hz = hull_set_of(g, s.minus(red.z_vertex(false)));
        rep.forward_pivot_z = !(hz - others).empty();

        // Predicted H = C + D + {l1..l4 of chosen literals}.
        VertexSet h = red.role_c | red.role_d;
        for (int i = 0; i < m; ++i)
            for (int a = 1; a <= 3; ++a) h.insert(red.triangle_vertex(i, chosen[i], a));
        for (std::size_t t = 0; t < red.pairs.size(); ++t) {
            const auto& pr = red.pairs[t];
            if (pr.p == chosen[pr.i]) h.insert(red.pair_vertex(static_cast<int>(t), 0));
            if (pr.q == chosen[pr.j]) h.insert(red.pair_vertex(static_cast<int>(t), 2));
        }
        rep.forward_hull_matches = hz == h;

        bool sane = true;
        (g.vertices() - h).for_each([&](int v) {
            if (g.neighbors(v).intersection_count(h) > 1) sane = false;
        });
        rep.degree_sanity = sane;
    }

    rep.solver_answer = exists_e_independent_at_least(g, red.k, limits.node_budget);
    if (!rep.solver_answer) {
        rep.verdict = Verdict::Timeout;
    } else {
        rep.verdict = (rep.satisfiable == *rep.solver_answer) ? Verdict::Consistent
                                                              : Verdict::Inconsistent;
    }
    return rep;
}

}  // namespace cycc
