#include "cycc/independence.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cycc/blocks.hpp"
#include "cycc/convexity.hpp"

namespace cycc {

namespace {

void require_nonempty(const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("independence: set must be nonempty");
}

// Deletion hulls hull(s \ {a}) for every a in s, in the order of members.
std::vector<VertexSet> deletion_hulls(const Graph& g, const VertexSet& s,
                                      const std::vector<int>& members) {
    std::vector<VertexSet> hulls;
    hulls.reserve(members.size());
    for (int a : members) hulls.push_back(hull_set_of(g, s.minus(a)));
    return hulls;
}

}  // namespace

std::optional<int> c_independence_witness(const Graph& g, const VertexSet& s) {
    require_nonempty(s);
    auto members = s.to_vector();
    VertexSet covered(g.vertex_count());
    for (const VertexSet& h : deletion_hulls(g, s, members)) covered |= h;
    VertexSet diff = hull_set_of(g, s) - covered;
    if (diff.empty()) return std::nullopt;
    return diff.first();
}

std::optional<ExchangeCertificate> e_independence(const Graph& g, const VertexSet& s) {
    require_nonempty(s);
    auto members = s.to_vector();
    if (members.size() == 1) return ExchangeCertificate{s, std::nullopt, std::nullopt};

    auto hulls = deletion_hulls(g, s, members);
    const std::size_t k = members.size();

    // prefix[i] = union of hulls[0..i), suffix[i] = union of hulls[i..k).
    std::vector<VertexSet> prefix(k + 1, VertexSet(g.vertex_count()));
    std::vector<VertexSet> suffix(k + 1, VertexSet(g.vertex_count()));
    for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] | hulls[i];
    for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] | hulls[i];

    for (std::size_t i = 0; i < k; ++i) {
        VertexSet diff = hulls[i] - (prefix[i] | suffix[i + 1]);
        if (!diff.empty()) return ExchangeCertificate{s, members[i], diff.first()};
    }
    return std::nullopt;
}

namespace {

struct RollbackDsu {
    std::vector<int> parent, size;
    std::vector<int> merged;  // child roots, for undo

    explicit RollbackDsu(int n) : parent(n), size(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        merged.push_back(b);
        return true;
    }

    std::size_t mark() const { return merged.size(); }

    void rollback(std::size_t to) {
        while (merged.size() > to) {
            int b = merged.back();
            merged.pop_back();
            size[parent[b]] -= size[b];
            parent[b] = b;
        }
    }
};

class SubsetSearch {
public:
    SubsetSearch(const Graph& g, long long node_budget)
        : g_(g),
          n_(g.vertex_count()),
          dsu_(g.vertex_count()),
          chosen_(g.vertex_count()),
          on_cycle_(g.vertex_count()),
          budget_(node_budget) {
        for (const VertexSet& b : block_decomposition(g).blocks)
            if (b.count() >= 3) on_cycle_ |= b;
    }

    // First E-independent k-set in lexicographic order, or nullopt.
    // budget_exhausted() reports whether the search was cut short.
    std::optional<ExchangeCertificate> search(int k) {
        target_ = k;
        result_.reset();
        deepest_ = 0;
        recurse(0, 0, 0, 0);
        return result_;
    }

    bool budget_exhausted() const { return budget_ < 0; }
    int deepest_reached() const { return deepest_; }

private:
    void recurse(int next, int depth, int edge_count, int off_cycle_count) {
        if (result_ || budget_ < 0) return;
        --budget_;
        deepest_ = std::max(deepest_, depth);
        if (depth == target_) {
            if (edge_count >= 1) try_candidate();
            return;
        }
        for (int v = next; v <= n_ - (target_ - depth); ++v) {
            // Lemma-based prunes (sound for target sizes >= 3): the chosen set
            // must induce a forest and contain at most one vertex of G that
            // lies on no cycle.
            int off = off_cycle_count + (on_cycle_.contains(v) ? 0 : 1);
            if (off >= 2) continue;

            bool cycle = false;
            int added_edges = 0;
            std::size_t dsu_mark = dsu_.mark();
            (g_.neighbors(v) & chosen_).for_each([&](int u) {
                if (cycle) return;
                ++added_edges;
                if (!dsu_.unite(v, u)) cycle = true;
            });
            if (!cycle) {
                chosen_.insert(v);
                recurse(v + 1, depth + 1, edge_count + added_edges, off);
                chosen_.erase(v);
            }
            dsu_.rollback(dsu_mark);
            if (result_ || budget_ < 0) return;
        }
    }

    void try_candidate() {
        // Lemma-based shape check on the closure: at most two components, at
        // most one of them trivial.
        VertexSet closure = hull_set_of(g_, chosen_);
        auto comps = connected_components(g_, closure);
        if (comps.size() > 2) return;
        if (comps.size() == 2 && comps[0].count() > 1 && comps[1].count() > 1) return;

        auto members = chosen_.to_vector();
        auto hulls = deletion_hulls(g_, chosen_, members);

        // Lemma: no two deletions may leave a hull set.
        VertexSet full = g_.vertices();
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (hulls[i] != full) continue;
            for (int b : members)
                if (b != members[i] && hull_set_of(g_, chosen_.minus(members[i]).minus(b)) == full)
                    return;
            break;
        }

        const std::size_t k = members.size();
        std::vector<VertexSet> prefix(k + 1, VertexSet(n_)), suffix(k + 1, VertexSet(n_));
        for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] | hulls[i];
        for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] | hulls[i];
        for (std::size_t i = 0; i < k; ++i) {
            VertexSet diff = hulls[i] - (prefix[i] | suffix[i + 1]);
            if (!diff.empty()) {
                result_ = ExchangeCertificate{chosen_, members[i], diff.first()};
                return;
            }
        }
    }

    const Graph& g_;
    int n_;
    int target_ = 0;
    RollbackDsu dsu_;
    VertexSet chosen_;
    VertexSet on_cycle_;
    long long budget_;
    int deepest_ = 0;
    std::optional<ExchangeCertificate> result_;
};

void require_connected(const Graph& g) {
    if (g.vertex_count() == 0 || !g.is_connected())
        throw std::invalid_argument("exchange number: graph must be connected and nonempty");
}

ExchangeCertificate pair_certificate(const Graph& g) {
    // Any two vertices form an E-independent set: with pivot u, the other
    // vertex lies in its own singleton hull and in no deletion hull of u.
    return ExchangeCertificate{VertexSet(g.vertex_count(), {0, 1}), 0, 1};
}

}  // namespace

ExchangeResult exchange_number_exact(const Graph& g) {
    require_connected(g);
    if (g.vertex_count() == 1)
        return {1, ExchangeCertificate{VertexSet(1, {0}), std::nullopt, std::nullopt}, "exact"};

    SubsetSearch search(g, std::numeric_limits<long long>::max());
    for (int k = g.vertex_count(); k >= 3; --k)
        if (auto cert = search.search(k)) return {k, *cert, "exact"};
    return {2, pair_certificate(g), "exact"};
}

int exchange_number_brute(const Graph& g, int cap) {
    require_connected(g);
    if (g.vertex_count() > cap)
        throw std::invalid_argument("exchange_number_brute: graph exceeds cap");
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.insert(v);
        if (s.count() <= best) continue;
        if (e_independence(g, s)) best = s.count();
    }
    return best;
}

std::optional<ExchangeCertificate> find_e_independent_of_size(const Graph& g, int k) {
    require_connected(g);
    if (k < 1 || k > g.vertex_count()) return std::nullopt;
    if (k == 1) return ExchangeCertificate{VertexSet(g.vertex_count(), {0}), std::nullopt, std::nullopt};
    if (k == 2) return pair_certificate(g);
    SubsetSearch search(g, std::numeric_limits<long long>::max());
    return search.search(k);
}

std::optional<bool> exists_e_independent_at_least(const Graph& g, int k, long long node_budget) {
    require_connected(g);
    if (k <= 1) return true;
    if (k == 2) return g.vertex_count() >= 2;
    SubsetSearch search(g, node_budget);
    for (int size = k; size <= g.vertex_count(); ++size) {
        if (search.search(size)) return true;
        if (search.budget_exhausted()) return std::nullopt;
        if (search.deepest_reached() < size) return false;  // no larger acyclic subset exists
    }
    return false;
}

}  // namespace cycc
