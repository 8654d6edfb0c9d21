#include <benchmark/benchmark.h>

#include "cycc/convexity.hpp"
#include "cycc/formulas.hpp"
#include "cycc/generators.hpp"
#include "cycc/independence.hpp"
#include "cycc/products.hpp"

namespace {

void bm_hull_grid(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    cycc::Graph g = cycc::product(cycc::path_graph(n), cycc::path_graph(n),
                                  cycc::ProductKind::Cartesian);
    cycc::VertexSet seed(g.vertex_count());
    for (int i = 0; i < n; ++i) seed.insert(i * n + i);
    for (auto _ : state) benchmark::DoNotOptimize(cycc::hull_set_of(g, seed));
}
BENCHMARK(bm_hull_grid)->Arg(8)->Arg(16)->Arg(32);

void bm_exact_chain(benchmark::State& state) {
    const int blocks = static_cast<int>(state.range(0));
    std::vector<cycc::Graph> parts(static_cast<std::size_t>(blocks), cycc::complete_graph(4));
    cycc::Graph g = cycc::chordal_chain(parts);
    for (auto _ : state) benchmark::DoNotOptimize(cycc::exchange_number_exact(g).value);
}
BENCHMARK(bm_exact_chain)->Arg(2)->Arg(3)->Arg(4);

void bm_exact_product(benchmark::State& state) {
    cycc::Graph g = cycc::product(cycc::complete_graph(3), cycc::path_graph(
                                      static_cast<int>(state.range(0))),
                                  cycc::ProductKind::Cartesian);
    for (auto _ : state) benchmark::DoNotOptimize(cycc::exchange_number_exact(g).value);
}
BENCHMARK(bm_exact_product)->Arg(3)->Arg(4);

void bm_formula_chain(benchmark::State& state) {
    std::vector<cycc::Graph> parts(static_cast<std::size_t>(state.range(0)),
                                   cycc::complete_graph(4));
    cycc::Graph g = cycc::chordal_chain(parts);
    for (auto _ : state) benchmark::DoNotOptimize(cycc::exchange_formula(g)->value);
}
BENCHMARK(bm_formula_chain)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
