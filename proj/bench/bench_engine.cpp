#include <benchmark/benchmark.h>

#include <random>

#include "fungal/engine.hpp"

using namespace fungal;

namespace {

Configuration random_grid(int n, double density, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution one(density);
    std::vector<State> cells(size_t(n) * n);
    for (State& v : cells) v = State(one(rng));
    return Configuration(n, n, 0, std::move(cells));
}

void BM_ApplyReference(benchmark::State& st) {
    const Configuration c = random_grid(int(st.range(0)), 0.5, 1);
    for (auto _ : st) benchmark::DoNotOptimize(reference::apply_direction(c, maj15(), Direction::H));
    st.SetItemsProcessed(st.iterations() * st.range(0) * st.range(0));
}

void BM_ApplyPackedSerial(benchmark::State& st) {
    const Configuration c = random_grid(int(st.range(0)), 0.5, 1);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::apply_direction(c, maj15(), Direction::H, kernels::Exec::serial));
    st.SetItemsProcessed(st.iterations() * st.range(0) * st.range(0));
}

void BM_ApplyPackedParallel(benchmark::State& st) {
    const Configuration c = random_grid(int(st.range(0)), 0.5, 1);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::apply_direction(c, maj15(), Direction::H, kernels::Exec::parallel));
    st.SetItemsProcessed(st.iterations() * st.range(0) * st.range(0));
}

// Fixpoints on a sparse f3 seed where only a few rows are active at a time.
void BM_FixpointReference(benchmark::State& st) {
    const Configuration c = random_grid(int(st.range(0)), 0.002, 2);
    for (auto _ : st) benchmark::DoNotOptimize(reference::run_to_fixpoint(c, table_rule(3), Schedule::hv()));
}

void BM_FixpointSparse(benchmark::State& st) {
    const Configuration c = random_grid(int(st.range(0)), 0.002, 2);
    for (auto _ : st) benchmark::DoNotOptimize(run_to_fixpoint(c, table_rule(3), Schedule::hv()));
}

void BM_FixpointDense(benchmark::State& st) {
    const Configuration c = random_grid(int(st.range(0)), 0.002, 2);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::run_to_fixpoint_dense(c, table_rule(3), Schedule::hv(), kernels::Exec::serial));
}

void BM_FixpointDenseParallel(benchmark::State& st) {
    const Configuration c = random_grid(int(st.range(0)), 0.002, 2);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::run_to_fixpoint_dense(c, table_rule(3), Schedule::hv(), kernels::Exec::parallel));
}

}  // namespace

BENCHMARK(BM_ApplyReference)->Arg(64)->Arg(512)->Arg(2048);
BENCHMARK(BM_ApplyPackedSerial)->Arg(64)->Arg(512)->Arg(2048);
BENCHMARK(BM_ApplyPackedParallel)->Arg(64)->Arg(512)->Arg(2048);
BENCHMARK(BM_FixpointReference)->Arg(64)->Arg(256);
BENCHMARK(BM_FixpointSparse)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_FixpointDense)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_FixpointDenseParallel)->Arg(64)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
