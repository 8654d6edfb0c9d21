#include "cycc/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cycc {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (!adj_[u].contains(v)) {
            adj_[u].insert(v);
            adj_[v].insert(u);
            ++m_;
        }
    }
}

const VertexSet& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex id out of range");
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    return connected_components(*this, vertices()).size() == 1;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> comps;
    VertexSet seen(g.vertex_count());
    s.for_each([&](int start) {
        if (seen.contains(start)) return;
        VertexSet comp(g.vertex_count());
        std::deque<int> queue{start};
        seen.insert(start);
        comp.insert(start);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            (g.neighbors(u) & s).for_each([&](int v) {
                if (!seen.contains(v)) {
                    seen.insert(v);
                    comp.insert(v);
                    queue.push_back(v);
                }
            });
        }
        comps.push_back(std::move(comp));
    });
    return comps;
}

std::vector<int> bfs_distances(const Graph& g, int source, const VertexSet& within) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    if (!within.contains(source)) return dist;
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        (g.neighbors(u) & within).for_each([&](int v) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        });
    }
    return dist;
}

int diameter(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("diameter: graph is disconnected");
    int best = 0;
    VertexSet all = g.vertices();
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int d : bfs_distances(g, v, all)) best = std::max(best, d);
    }
    return best;
}

}  // namespace cycc
