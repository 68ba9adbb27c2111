#include <random>

#include <benchmark/benchmark.h>

#include "clusterbn/configuration.hpp"
#include "clusterbn/generate.hpp"
#include "clusterbn/kernels.hpp"

using namespace clusterbn;

namespace {

IntMatrix chain_matrix(std::size_t n) {
    std::mt19937_64 rng(n);
    GeneratorOptions opts;
    opts.single_origin = true;
    opts.chain_probability = 1.0;
    return proximity_matrix(random_configuration(rng, n, SurfaceModel::plane(), opts)).entries;
}

std::vector<Configuration> batch(std::size_t count) {
    std::mt19937_64 rng(17);
    std::vector<Configuration> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(random_configuration(rng, 30, SurfaceModel::plane()));
    return out;
}

void BM_InverseSerial(benchmark::State& state) {
    const auto p = chain_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::unit_lower_inverse_serial(p));
}

void BM_InverseParallel(benchmark::State& state) {
    const auto p = chain_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::unit_lower_inverse_parallel(p));
}

void BM_TotalDSerial(benchmark::State& state) {
    const auto configs = batch(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::total_d_serial(configs));
}

void BM_TotalDParallel(benchmark::State& state) {
    const auto configs = batch(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::total_d_parallel(configs));
}

}  // namespace

BENCHMARK(BM_InverseSerial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InverseParallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TotalDSerial)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TotalDParallel)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
