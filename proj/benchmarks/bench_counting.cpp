#include "dihom/enumerate.hpp"
#include "dihom/homcount.hpp"
#include "dihom/order_search.hpp"
#include "dihom/random.hpp"
#include "dihom/tree_counter.hpp"

#include <benchmark/benchmark.h>

using namespace dihom;

namespace {

void BM_TreeCounter(benchmark::State& state)
{
    Rng rng(1);
    const auto t = random_tree(static_cast<int>(state.range(0)), rng);
    const auto h = gen_erdos_renyi_digraph(static_cast<int>(state.range(1)), 0.3, rng);
    TreeCounter counter(t);
    for (auto _ : state)
        benchmark::DoNotOptimize(counter.try_count(h));
}
BENCHMARK(BM_TreeCounter)->Args({4, 8})->Args({8, 32})->Args({8, 64});

void BM_HomTreeExact(benchmark::State& state)
{
    Rng rng(2);
    const auto t = random_tree(static_cast<int>(state.range(0)), rng);
    const auto h = complete_digraph(static_cast<int>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(hom_tree(t, h));
}
BENCHMARK(BM_HomTreeExact)->Args({12, 64});

void BM_HomGeneral(benchmark::State& state)
{
    Rng rng(3);
    const auto t = random_tree(static_cast<int>(state.range(0)), rng).to_digraph();
    const auto h = gen_erdos_renyi_digraph(static_cast<int>(state.range(1)), 0.3, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(hom_general(t, h));
}
BENCHMARK(BM_HomGeneral)->Args({4, 8})->Args({6, 12});

void BM_ThreeArcSweep(benchmark::State& state)
{
    const auto trees = enumerate_directed_trees(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(compare_family(trees, static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
}
BENCHMARK(BM_ThreeArcSweep)->Args({4, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
