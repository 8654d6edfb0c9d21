#include "cycc/formulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "cycc/blocks.hpp"
#include "cycc/chordal.hpp"
#include "cycc/convexity.hpp"

namespace cycc {

namespace {

void require_connected(const Graph& g, const char* who) {
    if (g.vertex_count() == 0 || !g.is_connected())
        throw std::invalid_argument(std::string(who) + ": graph must be connected and nonempty");
}

bool is_path_shape(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || g.edge_count() != n - 1 || !g.is_connected()) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

// Induced subgraph on `block` is connected and stays connected after any
// single vertex removal (true for K_2 and every 2-connected block).
bool induced_biconnected(const Graph& g, const VertexSet& block) {
    if (block.count() < 2) return false;
    if (connected_components(g, block).size() != 1) return false;
    bool ok = true;
    block.for_each([&](int v) {
        if (ok && block.count() > 2 && connected_components(g, block.minus(v)).size() > 1)
            ok = false;
    });
    return ok;
}

ExchangeCertificate pair_certificate(const Graph& g) {
    return ExchangeCertificate{VertexSet(g.vertex_count(), {0, 1}), 0, 1};
}

// Validates proof-guided candidate sets of the target size; falls back to a
// pruned search. The formulas guarantee a witness exists.
ExchangeCertificate certified(const Graph& g, int value, const std::vector<VertexSet>& candidates) {
    for (const VertexSet& s : candidates) {
        if (s.count() != value) continue;
        if (auto cert = e_independence(g, s)) return *cert;
    }
    if (auto cert = find_e_independent_of_size(g, value)) return *cert;
    throw std::logic_error("exchange_formula: no certificate of the predicted size");
}

// Shared vertex of two consecutive chain blocks.
int glue_vertex(const VertexSet& a, const VertexSet& b) { return (a & b).first(); }

// Proof-guided E-independent base set over a chain of blocks B_1..B_l: an
// edge u1,u1' inside B_1 plus, for each later block, a neighbor of the
// incoming cut vertex. Size l+1. forced_edge pins u1,u1' when provided.
VertexSet chain_base_set(const Graph& g, const std::vector<VertexSet>& order,
                         std::pair<int, int> forced_edge = {-1, -1}) {
    VertexSet s(g.vertex_count());
    const std::size_t l = order.size();

    int right_cut = l > 1 ? glue_vertex(order[0], order[1]) : -1;
    int u = forced_edge.first, v = forced_edge.second;
    if (u < 0) {
        auto members = order[0].to_vector();
        for (std::size_t i = 0; i < members.size() && u < 0; ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (!g.has_edge(members[i], members[j])) continue;
                if (members[i] == right_cut || members[j] == right_cut) continue;
                u = members[i];
                v = members[j];
                break;
            }
        if (u < 0)  // no edge avoids the cut vertex (e.g. K_2 first block)
            for (std::size_t i = 0; i < members.size() && u < 0; ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    if (g.has_edge(members[i], members[j])) {
                        u = members[i];
                        v = members[j];
                        break;
                    }
    }
    if (u < 0) throw std::logic_error("chain_base_set: first block has no edge");
    s.insert(u);
    s.insert(v);

    for (std::size_t i = 1; i < l; ++i) {
        int c = glue_vertex(order[i - 1], order[i]);
        int next_cut = i + 1 < l ? glue_vertex(order[i], order[i + 1]) : -1;
        VertexSet cand = g.neighbors(c) & order[i];
        int pick = -1;
        cand.for_each([&](int w) {
            if (pick < 0 && w != next_cut) pick = w;
        });
        if (pick < 0) pick = cand.first();
        if (pick < 0) throw std::logic_error("chain_base_set: cut vertex has no block neighbor");
        s.insert(pick);
    }
    return s;
}

}  // namespace

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.is_connected() && g.edge_count() == g.vertex_count() - 1;
}

bool is_cycle_shape(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n || !g.is_connected()) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_complete(const Graph& g) {
    const int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_complete_multipartite(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) return false;
    // Complement components must be independent sets of g (then all cross
    // pairs are adjacent by definition of complement components).
    std::vector<std::pair<int, int>> co_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) co_edges.emplace_back(u, v);
    Graph co(n, co_edges);
    for (const VertexSet& part : connected_components(co, co.vertices())) {
        bool has_edge = false;
        part.for_each([&](int u) {
            if (!has_edge && (g.neighbors(u) & part).count() > 0) has_edge = true;
        });
        if (has_edge) return false;
    }
    return g.is_connected();
}

int universal_vertex_count(const Graph& g) {
    int c = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == g.vertex_count() - 1) ++c;
    return c;
}

std::optional<VertexSet> unicyclic_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n || !g.is_connected()) return std::nullopt;
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    VertexSet alive = g.vertices();
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        alive.erase(v);
        (g.neighbors(v) & alive).for_each([&](int u) {
            if (--deg[u] == 1) queue.push_back(u);
        });
    }
    return alive;
}

bool is_exchange_n_minus_1(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || !g.is_connected()) return false;
    if (n == 3) return true;  // K_3 or P_3
    auto cyc = unicyclic_cycle(g);
    return cyc && cyc->count() == n - 1;
}

ChainStructure chain_structure(const Graph& g) {
    require_connected(g, "chain_structure");
    BlockDecomposition bd = block_decomposition(g);
    ChainStructure cs;

    bool path_tree = true;
    for (const auto& adj : bd.tree_adj)
        if (adj.size() > 2) path_tree = false;
    cs.is_single_chain = path_tree;

    if (!cs.is_single_chain) {
        cs.blocks_in_order = bd.blocks;
    } else if (bd.blocks.size() == 1) {
        cs.blocks_in_order = bd.blocks;
    } else {
        // Walk the path from the leaf block with the lowest vertex id.
        int start = -1;
        for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
            if (bd.tree_adj[b].size() > 1) continue;
            if (start < 0 || bd.blocks[b].first() < bd.blocks[start].first())
                start = static_cast<int>(b);
        }
        int prev = -1, cur = start;
        while (cur >= 0) {
            if (cur < static_cast<int>(bd.blocks.size()))
                cs.blocks_in_order.push_back(bd.blocks[cur]);
            int next = -1;
            for (int nb : bd.tree_adj[cur])
                if (nb != prev) next = nb;
            prev = cur;
            cur = next;
        }
    }

    int run = 0;
    for (const VertexSet& b : cs.blocks_in_order) {
        if (b.count() == 2) {
            cs.has_k2_blocks = true;
            run = 0;
        } else {
            ++run;
            cs.longest_non_k2_chain_length = std::max(cs.longest_non_k2_chain_length, run);
        }
    }
    return cs;
}

std::optional<EdgeVertexWitness> edge_vertex_property(const Graph& g, const VertexSet& block) {
    if (!induced_biconnected(g, block))
        throw std::invalid_argument("edge_vertex_property: block must be K_2 or 2-connected");
    auto members = block.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            int u = members[i], v = members[j];
            if (!g.has_edge(u, v)) continue;
            auto du = bfs_distances(g, u, block);
            auto dv = bfs_distances(g, v, block);
            for (int x : members)
                if (du[x] >= 2 && dv[x] >= 2) return EdgeVertexWitness{u, v, x};
        }
    return std::nullopt;
}

std::optional<VertexSeparationWitness> vertex_separation_property(const Graph& g,
                                                                  const VertexSet& block) {
    require_connected(g, "vertex_separation_property");
    BlockDecomposition bd = block_decomposition(g);
    for (int c : bd.cut_vertex_list) {
        // The cut vertex must belong to the block itself, as in the theorem's
        // chain construction (c_k is the vertex gluing B_k to its neighbor);
        // a remote cut vertex adjacent to the block can satisfy the letter of
        // the definition while the l+2 construction fails.
        if (!block.contains(c)) continue;
        VertexSet xs = g.neighbors(c) & block;
        std::optional<VertexSeparationWitness> found;
        xs.for_each([&](int x) {
            if (found) return;
            block.for_each([&](int y) {
                if (found || y == x || y == c) return;
                if (bd.cut_vertices.contains(y)) return;
                if (g.neighbors(c).contains(y) || g.neighbors(x).contains(y)) return;
                found = VertexSeparationWitness{x, y, c};
            });
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::vector<BlockProperties> block_property_report(const Graph& g) {
    require_connected(g, "block_property_report");
    BlockDecomposition bd = block_decomposition(g);
    std::vector<BlockProperties> out;
    out.reserve(bd.blocks.size());
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        BlockProperties p;
        p.block = bd.blocks[b];
        p.is_end_block = bd.is_end_block(b);
        p.edge_vertex = edge_vertex_property(g, p.block);
        p.vertex_separation = vertex_separation_property(g, p.block);
        out.push_back(std::move(p));
    }
    return out;
}

std::optional<ExchangeResult> exchange_formula(const Graph& g) {
    require_connected(g, "exchange_formula");
    const int n = g.vertex_count();
    if (n == 1)
        return ExchangeResult{1, {VertexSet(1, {0}), std::nullopt, std::nullopt}, "trivial"};

    // Rule 1: e_cc = 2 classes.
    if (is_cycle_shape(g)) return ExchangeResult{2, pair_certificate(g), "remark-cycle"};
    if (is_tree(g)) return ExchangeResult{2, pair_certificate(g), "remark-tree"};
    if (is_complete(g)) return ExchangeResult{2, pair_certificate(g), "remark-complete"};
    if (is_complete_multipartite(g))
        return ExchangeResult{2, pair_certificate(g), "remark-multipartite"};
    // The two-universal-vertices rule needs a guard: with two universal
    // vertices the hull of any edge is all of V, so an edge ab plus a vertex
    // c outside N(a) u N(b) is an E-independent 3-set ({a,b,c} with pivot c)
    // and the value is not 2 (e.g. K_2 joined to P_4, set {2,3,5}). When no
    // such witness exists the value 2 is forced, since any third member of
    // an E-independent set would leave two full deletion hulls.
    if (universal_vertex_count(g) >= 2) {
        bool witness = false;
        for (auto [a, b] : g.edges()) {
            if (witness) break;
            VertexSet cover = g.neighbors(a) | g.neighbors(b);
            cover.insert(a);
            cover.insert(b);
            witness = cover != g.vertices();
        }
        if (!witness) return ExchangeResult{2, pair_certificate(g), "remark-universal"};
    }

    // Rule 2: unicyclic with cycle shorter than the graph.
    if (auto cyc = unicyclic_cycle(g); cyc && cyc->count() < n) {
        auto cv = cyc->to_vector();
        VertexSet s(n);
        for (std::size_t i = 0; i + 1 < cv.size(); ++i) s.insert(cv[i]);
        s.insert((g.vertices() - *cyc).first());
        int m = static_cast<int>(cv.size());
        return ExchangeResult{m, certified(g, m, {s}), "unicyclic"};
    }

    // Rules 3 and 4: chordal single chains.
    if (!is_chordal(g)) return std::nullopt;
    ChainStructure cs = chain_structure(g);
    if (!cs.is_single_chain) return std::nullopt;

    if (!cs.has_k2_blocks) {
        auto props = block_property_report(g);
        // block_property_report and blocks_in_order both come from the block
        // decomposition, so align them by set equality.
        auto prop_of = [&](const VertexSet& b) -> const BlockProperties& {
            for (const auto& p : props)
                if (p.block == b) return p;
            throw std::logic_error("exchange_formula: block mismatch");
        };
        bool any_vsep = false, end_ev = false, any_ev = false;
        for (const VertexSet& b : cs.blocks_in_order) {
            const BlockProperties& p = prop_of(b);
            if (p.vertex_separation) any_vsep = true;
            if (p.edge_vertex) {
                any_ev = true;
                if (p.is_end_block) end_ev = true;
            }
        }
        const int l = static_cast<int>(cs.blocks_in_order.size());
        if (!any_ev && !any_vsep) {
            VertexSet base = chain_base_set(g, cs.blocks_in_order);
            return ExchangeResult{l + 1, certified(g, l + 1, {base}), "chain-l+1"};
        }
        if (any_vsep || end_ev) {
            std::vector<VertexSet> candidates;
            for (const VertexSet& b : cs.blocks_in_order) {
                const BlockProperties& p = prop_of(b);
                if (p.vertex_separation)
                    candidates.push_back(
                        chain_base_set(g, cs.blocks_in_order).plus(p.vertex_separation->y));
            }
            for (bool reversed : {false, true}) {
                auto order = cs.blocks_in_order;
                if (reversed) std::reverse(order.begin(), order.end());
                const BlockProperties& p = prop_of(order.front());
                if (p.is_end_block && p.edge_vertex)
                    candidates.push_back(
                        chain_base_set(g, order, {p.edge_vertex->u, p.edge_vertex->v})
                            .plus(p.edge_vertex->x));
            }
            return ExchangeResult{l + 2, certified(g, l + 2, candidates), "chain-l+2"};
        }
        return std::nullopt;  // internal-only edge-vertex: uncovered case
    }

    // Rule 4: chains containing K_2 blocks.
    const int l = cs.longest_non_k2_chain_length;
    if (l == 0) return ExchangeResult{2, pair_certificate(g), "chain-k2"};  // tree chain
    // Longest run of consecutive non-K2 blocks.
    std::size_t best_start = 0, best_len = 0, run_start = 0, run_len = 0;
    for (std::size_t i = 0; i < cs.blocks_in_order.size(); ++i) {
        if (cs.blocks_in_order[i].count() == 2) {
            run_len = 0;
        } else {
            if (run_len == 0) run_start = i;
            if (++run_len > best_len) {
                best_len = run_len;
                best_start = run_start;
            }
        }
    }
    std::vector<VertexSet> run(cs.blocks_in_order.begin() + best_start,
                               cs.blocks_in_order.begin() + best_start + best_len);
    VertexSet covered(n);
    for (const VertexSet& b : run) covered |= b;
    VertexSet s = chain_base_set(g, run).plus((g.vertices() - covered).first());
    return ExchangeResult{l + 2, certified(g, l + 2, {s}), "chain-k2"};
}

ExchangeResult exchange_auto(const Graph& g, int exact_cap) {
    if (auto r = exchange_formula(g)) return *r;
    if (g.vertex_count() > exact_cap)
        throw std::runtime_error("exchange_auto: no formula applies and graph exceeds exact cap");
    return exchange_number_exact(g);
}

namespace {

std::optional<ExchangeCertificate> product_certificate(const Graph& prod, int value,
                                                       const std::vector<VertexSet>& candidates) {
    for (const VertexSet& s : candidates) {
        if (s.count() != value) continue;
        if (auto cert = e_independence(prod, s)) return cert;
    }
    if (prod.vertex_count() <= 24) return find_e_independent_of_size(prod, value);
    return std::nullopt;
}

}  // namespace

ProductExchange product_exchange(const Graph& g, const Graph& h, ProductKind kind) {
    if (g.vertex_count() < 2 || h.vertex_count() < 2 || !g.is_connected() || !h.is_connected())
        throw std::invalid_argument("product_exchange: factors must be connected with >= 2 vertices");

    ProductExchange out;
    if (kind == ProductKind::Cartesian) {
        bool g_complete = is_complete(g), h_complete = is_complete(h);
        bool g_path = is_path_shape(g), h_path = is_path_shape(h);

        if ((g_complete && h_path) || (h_complete && g_path)) {
            if (g.vertex_count() == 2 && h.vertex_count() == 2) {
                // K_2 x P_2 is C_4; the cycle value, not the K_m x P_n formula.
                out.kind = ProductExchange::Kind::Exact;
                out.value = 2;
                out.tag = "remark-cycle";
                out.certificate = ExchangeCertificate{VertexSet(4, {0, 1}), 0, 1};
                return out;
            }
            Graph prod = product(g, h, kind);
            int path_n = (g_complete && h_path) ? h.vertex_count() : g.vertex_count();
            // Proof witness: the path row of one clique vertex plus the first
            // path vertex of a second clique vertex.
            VertexSet w(prod.vertex_count());
            if (g_complete && h_path) {
                for (int j = 0; j < h.vertex_count(); ++j) w.insert(product_vertex(g, h, 0, j));
                w.insert(product_vertex(g, h, 1, 0));
            } else {
                for (int i = 0; i < g.vertex_count(); ++i) w.insert(product_vertex(g, h, i, 0));
                w.insert(product_vertex(g, h, 0, 1));
            }
            out.kind = ProductExchange::Kind::Exact;
            out.value = path_n + 1;
            out.tag = "product-complete-path";
            out.certificate = product_certificate(prod, out.value, {w});
            return out;
        }
        if (g_complete && h_complete && g.vertex_count() >= 3 && h.vertex_count() >= 3) {
            out.kind = ProductExchange::Kind::Exact;
            out.value = 3;
            out.tag = "product-complete-complete";
            out.certificate = product_certificate(product(g, h, kind), 3, {});
            return out;
        }
        int eg = exchange_auto(g).value, eh = exchange_auto(h).value;
        out.kind = ProductExchange::Kind::LowerBound;
        out.value = (eg - 1) * (eh - 1) + 1;
        out.tag = "product-cartesian-bound";
        if (g_path && h_path) {
            out.value = std::max(out.value, g.vertex_count() + h.vertex_count() - 1);
            out.tag = "product-path-path-bound";
        }
        return out;
    }

    if (kind == ProductKind::Strong) {
        if (std::max(diameter(g), diameter(h)) > 2) {
            out.kind = ProductExchange::Kind::Exact;
            out.value = 3;
            out.tag = "product-strong";
            out.certificate = product_certificate(product(g, h, kind), 3, {});
        } else {
            out.kind = ProductExchange::Kind::NotApplicable;
            out.tag = "strong-diameter-le-2";
        }
        return out;
    }

    // Lexicographic. The edge-vertex test on h uses whole-graph distances
    // here, not the block-internal ones of the chain formulas: with an edge
    // uv in one h-layer and x in the same layer nonadjacent to both, every
    // deletion hull of {(a,u),(a,v),(a,x)} except hull({(a,u),(a,v)}) is a
    // nonadjacent pair and hence closed, so x pivots a 3-set. K_2 o P_4
    // shows the block-scoped variant would wrongly report 2 (P_4 has no
    // 2-connected block, yet its end vertices are far from the middle edge).
    bool three = diameter(g) >= 2;
    if (!three) {
        VertexSet all_h = h.vertices();
        for (auto [u, v] : h.edges()) {
            if (three) break;
            VertexSet near = h.neighbors(u) | h.neighbors(v);
            near.insert(u);
            near.insert(v);
            if (near != all_h) three = true;
        }
    }
    out.kind = ProductExchange::Kind::Exact;
    out.value = three ? 3 : 2;
    out.tag = "product-lex";
    if (three)
        out.certificate = product_certificate(product(g, h, kind), 3, {});
    else
        out.certificate = ExchangeCertificate{
            VertexSet(g.vertex_count() * h.vertex_count(), {0, 1}), 0, 1};
    return out;
}

}  // namespace cycc
