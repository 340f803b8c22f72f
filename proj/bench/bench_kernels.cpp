// Serial reference loops against the OpenMP kernels.
//
//   ./bench/covscale_bench --benchmark_counters_tabular=true
//   OMP_NUM_THREADS=8 ./bench/covscale_bench --benchmark_filter=Sweep

#include <vector>

#include <benchmark/benchmark.h>

#include "covscale/linac.hpp"
#include "covscale/sweep.hpp"

namespace {

using namespace covscale;

std::vector<Event> events(std::size_t n)
{
    std::vector<Event> out;
    out.reserve(n);
    for (const auto& s : make_samples(n, 1))
        out.push_back(s.event);
    return out;
}

using TransformFn = void (*)(std::span<const Event>, RelativeSpeed, Direction, std::span<Event>);
using SweepFn = SweepStats (*)(std::span<const SweepSample>);
using TableFn = std::vector<LinacRow> (*)(const LinacSpec&);

void BM_TransformAll(benchmark::State& state, TransformFn kernel)
{
    auto in = events(static_cast<std::size_t>(state.range(0)));
    std::vector<Event> out(in.size());
    RelativeSpeed speed{0.9};
    for (auto _ : state)
    {
        kernel(in, speed, Direction::forward, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Sweep(benchmark::State& state, SweepFn kernel)
{
    auto samples = make_samples(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(kernel(samples));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LinacTable(benchmark::State& state, TableFn kernel)
{
    LinacSpec spec;
    spec.energies_gev.clear();
    for (std::int64_t i = 0; i < state.range(0); ++i)
        spec.energies_gev.push_back(static_cast<double>(i % 1000));
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(kernel(spec));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK_CAPTURE(BM_TransformAll, serial, TransformFn{&serial::transform_all})->Range(1 << 10, 1 << 20);
BENCHMARK_CAPTURE(BM_TransformAll, openmp, TransformFn{&transform_all})->Range(1 << 10, 1 << 20);
BENCHMARK_CAPTURE(BM_Sweep, serial, SweepFn{&serial::sweep})->Range(1 << 10, 1 << 18);
BENCHMARK_CAPTURE(BM_Sweep, openmp, SweepFn{&sweep})->Range(1 << 10, 1 << 18);
BENCHMARK_CAPTURE(BM_LinacTable, serial, TableFn{&serial::generate_table})->Range(1 << 8, 1 << 18);
BENCHMARK_CAPTURE(BM_LinacTable, openmp, TableFn{&generate_table})->Range(1 << 8, 1 << 18);

} // namespace

BENCHMARK_MAIN();
