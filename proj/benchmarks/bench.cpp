#include <benchmark/benchmark.h>

#include <vector>

#include "schurlpp/greene.hpp"
#include "schurlpp/growth.hpp"
#include "schurlpp/lpp.hpp"
#include "schurlpp/rng.hpp"
#include "schurlpp/verify.hpp"

using namespace schurlpp;

namespace {

FsParams bench_params(int cols, int rows) {
    FsParams p;
    for (int i = 0; i < cols; ++i) p.x.push_back(Rat(1, 2 + i));
    for (int j = 0; j < rows; ++j) p.y.push_back(Rat(1, 2 + j));
    return p;
}

void bm_sample_full(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    FsParams p = bench_params(n, n);
    uint64_t replica = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_full(p, n, n, 7, replica++));
    state.SetItemsProcessed(state.iterations() * n * n);
}

void bm_grow_rectangle(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    WeightMatrix w = sample_full(bench_params(n, n), n, n, 7, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(grow_rectangle(w));
    state.SetItemsProcessed(state.iterations() * n * n);
}

// Streaming growth keeps only one column of partitions resident; this is the
// path a long-window scan takes.
void bm_column_growth(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    WeightMatrix w = sample_full(bench_params(n, n), n, n, 7, 0);
    for (auto _ : state) {
        ColumnGrowth cg(n);
        for (int i = 1; i <= n; ++i) {
            std::vector<int> column;
            for (int j = 1; j <= n; ++j) column.push_back(w.at(i, j));
            cg.feed(column);
        }
        benchmark::DoNotOptimize(cg);
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}

void bm_forward_rule(benchmark::State& state) {
    Partition rho({4, 2, 1});
    Partition mu({6, 3, 1});
    Partition nu({5, 4, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(forward_rule(rho, mu, nu, 3));
}

void bm_brute_h(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    WeightMatrix w = sample_full(bench_params(n, n), n, n, 11, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_h(w, 2));
}

void bm_mc_compare_full(benchmark::State& state) {
    DownRightPath gamma({0, 1}, "RD");
    FsParams p = bench_params(1, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(mc_compare_full(gamma, p, 5000, 3, 8, 1));
    state.SetItemsProcessed(state.iterations() * 5000);
}

BENCHMARK(bm_sample_full)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(bm_grow_rectangle)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_column_growth)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_forward_rule);
BENCHMARK(bm_brute_h)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(bm_mc_compare_full);

} // namespace

BENCHMARK_MAIN();
