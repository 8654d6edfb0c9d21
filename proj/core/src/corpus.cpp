#include "cycc/corpus.hpp"

#include <random>
#include <stdexcept>

#include "cycc/generators.hpp"
#include "cycc/products.hpp"

namespace cycc {

namespace {

Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

// Fan: path 0-1-2-3 plus apex 4; chordal, 2-connected, and edge (2,3) with
// vertex 0 witnesses the edge-vertex property.
Graph fan5() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

std::vector<int> random_tree_parents(int n, std::mt19937& rng) {
    std::vector<int> parents;
    for (int v = 1; v < n; ++v)
        parents.push_back(std::uniform_int_distribution<int>(0, v - 1)(rng));
    return parents;
}

Graph random_tree(int n, std::mt19937& rng) {
    std::vector<std::pair<int, int>> edges;
    auto parents = random_tree_parents(n, rng);
    for (int v = 1; v < n; ++v) edges.emplace_back(parents[v - 1], v);
    return Graph(n, edges);
}

void add(std::vector<CorpusEntry>& out, std::string name, Graph g, std::optional<int> expected,
         std::string source) {
    out.push_back({std::move(name), std::move(g), expected, std::move(source)});
}

std::vector<CorpusEntry> family_cycles() {
    std::vector<CorpusEntry> out;
    for (int n = 3; n <= 10; ++n)
        add(out, "C" + std::to_string(n), cycle_graph(n), 2, "cycles");
    return out;
}

std::vector<CorpusEntry> family_trees(unsigned seed) {
    std::vector<CorpusEntry> out;
    std::mt19937 rng(seed);
    for (int n = 2; n <= 10; ++n)
        add(out, "T" + std::to_string(n), random_tree(n, rng), 2, "trees");
    add(out, "P7", path_graph(7), 2, "trees");
    add(out, "star6", complete_multipartite({1, 5}), 2, "trees");
    return out;
}

std::vector<CorpusEntry> family_complete() {
    std::vector<CorpusEntry> out;
    for (int n = 3; n <= 8; ++n)
        add(out, "K" + std::to_string(n), complete_graph(n), 2, "complete");
    return out;
}

std::vector<CorpusEntry> family_multipartite() {
    std::vector<CorpusEntry> out;
    const std::vector<std::vector<int>> parts = {{1, 2}, {2, 2}, {2, 3}, {3, 3},
                                                 {1, 2, 3}, {2, 2, 2}, {1, 1, 3}, {3, 3, 3}};
    for (const auto& p : parts) {
        std::string name = "K";
        for (std::size_t i = 0; i < p.size(); ++i)
            name += (i ? "," : "_") + std::to_string(p[i]);
        add(out, name, complete_multipartite(p), 2, "multipartite");
    }
    return out;
}

std::vector<CorpusEntry> family_universal(unsigned seed) {
    std::vector<CorpusEntry> out;
    std::mt19937 rng(seed + 1);
    // K_2 joined to arbitrary small graphs gives two universal vertices. No
    // pinned expectation: the guarded universal rule declines some of these
    // (their exchange number exceeds 2), so verify compares formula vs exact.
    add(out, "K2+P4", join(complete_graph(2), path_graph(4)), std::nullopt, "universal");
    add(out, "K2+C5", join(complete_graph(2), cycle_graph(5)), std::nullopt, "universal");
    add(out, "K2+diamond", join(complete_graph(2), diamond()), std::nullopt, "universal");
    for (int n = 3; n <= 6; ++n)
        add(out, "K2+T" + std::to_string(n), join(complete_graph(2), random_tree(n, rng)),
            std::nullopt, "universal");
    return out;
}

std::vector<CorpusEntry> family_unicyclic(unsigned seed) {
    std::vector<CorpusEntry> out;
    std::mt19937 rng(seed + 2);
    for (int m = 3; m <= 6; ++m)
        for (int extra = 1; extra <= 4; ++extra) {
            std::vector<int> parents;
            for (int j = 0; j < extra; ++j)
                parents.push_back(std::uniform_int_distribution<int>(0, m + j - 1)(rng));
            add(out, "U" + std::to_string(m) + "." + std::to_string(extra),
                unicyclic(m, parents), m, "unicyclic");
        }
    return out;
}

std::vector<CorpusEntry> family_pendant() {
    std::vector<CorpusEntry> out;
    for (int n = 4; n <= 9; ++n)
        add(out, "C" + std::to_string(n - 1) + ",1", cycle_with_pendant(n), n - 1, "pendant");
    return out;
}

std::vector<CorpusEntry> family_chains(int max_blocks, unsigned seed) {
    std::vector<CorpusEntry> out;
    const auto& names = chain_gadget_names();
    const int g = static_cast<int>(names.size());

    auto build = [&](const std::vector<int>& idx) {
        std::vector<Graph> blocks;
        std::string name = "chain";
        for (int i : idx) {
            blocks.push_back(chain_gadget(names[i]));
            name += "-" + names[i];
        }
        add(out, name, chordal_chain(blocks), std::nullopt, "chordal-chains");
    };

    // All pairs, then a seeded sample of longer chains.
    if (max_blocks >= 2)
        for (int a = 0; a < g; ++a)
            for (int b = 0; b < g; ++b) build({a, b});
    std::mt19937 rng(seed + 3);
    for (int len = 3; len <= max_blocks; ++len)
        for (int rep = 0; rep < 18; ++rep) {
            std::vector<int> idx;
            for (int i = 0; i < len; ++i)
                idx.push_back(std::uniform_int_distribution<int>(0, g - 1)(rng));
            build(idx);
        }
    return out;
}

std::vector<CorpusEntry> family_products() {
    std::vector<CorpusEntry> out;
    struct Factor {
        std::string name;
        Graph graph;
    };
    const std::vector<Factor> factors = {{"P2", path_graph(2)}, {"P3", path_graph(3)},
                                         {"P4", path_graph(4)}, {"C4", cycle_graph(4)},
                                         {"K3", complete_graph(3)}, {"K4", complete_graph(4)}};
    const std::vector<std::pair<ProductKind, std::string>> kinds = {
        {ProductKind::Cartesian, "cart"},
        {ProductKind::Strong, "strong"},
        {ProductKind::Lexicographic, "lex"}};
    for (const auto& [kind, kname] : kinds)
        for (const auto& a : factors)
            for (const auto& b : factors) {
                if (a.graph.vertex_count() * b.graph.vertex_count() > 16) continue;
                add(out, a.name + "x" + b.name + "." + kname, product(a.graph, b.graph, kind),
                    std::nullopt, "products");
            }
    return out;
}

}  // namespace

const std::vector<std::string>& chain_gadget_names() {
    static const std::vector<std::string> names = {"K2", "K3", "K4", "diamond", "fan"};
    return names;
}

Graph chain_gadget(const std::string& name) {
    if (name == "K2") return complete_graph(2);
    if (name == "K3") return complete_graph(3);
    if (name == "K4") return complete_graph(4);
    if (name == "diamond") return diamond();
    if (name == "fan") return fan5();
    throw std::invalid_argument("chain_gadget: unknown gadget " + name);
}

std::vector<CorpusEntry> corpus_generate(const std::string& family, int max_blocks,
                                         unsigned seed) {
    if (family == "cycles") return family_cycles();
    if (family == "trees") return family_trees(seed);
    if (family == "complete") return family_complete();
    if (family == "multipartite") return family_multipartite();
    if (family == "universal") return family_universal(seed);
    if (family == "unicyclic") return family_unicyclic(seed);
    if (family == "pendant") return family_pendant();
    if (family == "chordal-chains") return family_chains(max_blocks, seed);
    if (family == "products") return family_products();
    if (family == "all") {
        std::vector<CorpusEntry> out;
        for (const char* f : {"cycles", "trees", "complete", "multipartite", "universal",
                              "unicyclic", "pendant", "chordal-chains", "products"}) {
            auto part = corpus_generate(f, max_blocks, seed);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("corpus_generate: unknown family " + family);
}

}  // namespace cycc
