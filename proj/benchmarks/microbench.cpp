#include <benchmark/benchmark.h>

#include <cstdint>

#include "spinex/baselines.hpp"
#include "spinex/detector.hpp"
#include "spinex/matrix.hpp"
#include "spinex/rng.hpp"

namespace {

spinex::FeatureMatrix make_matrix(std::size_t n, std::size_t d) {
    spinex::SeededRng rng(n * 1000003ULL + d);
    return spinex::random_normal_matrix(n, d, rng);
}

void bm_compute_scores(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto d = static_cast<std::size_t>(state.range(1));
    const spinex::FeatureMatrix m = make_matrix(n, d);
    spinex::DetectorConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(spinex::compute_scores(m, cfg));
    }
    state.SetComplexityN(static_cast<std::int64_t>(n));
}

void bm_compute_scores_weighted(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const spinex::FeatureMatrix m = make_matrix(n, 8);
    spinex::DetectorConfig cfg;
    cfg.use_weights = true;
    for (auto _ : state) {
        benchmark::DoNotOptimize(spinex::compute_scores(m, cfg));
    }
}

void bm_compute_scores_workers(benchmark::State& state) {
    const spinex::FeatureMatrix m = make_matrix(1500, 16);
    spinex::DetectorConfig cfg;
    cfg.worker_count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(spinex::compute_scores(m, cfg));
    }
}

void bm_knn_scores(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const spinex::FeatureMatrix m = make_matrix(n, 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spinex::knn_scores(m, 5));
    }
    state.SetComplexityN(static_cast<std::int64_t>(n));
}

void bm_hbos_scores(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const spinex::FeatureMatrix m = make_matrix(n, 8);
    const std::size_t bins = spinex::auto_bin_count(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(spinex::hbos_scores(m, bins));
    }
    state.SetComplexityN(static_cast<std::int64_t>(n));
}

}  // namespace

BENCHMARK(bm_compute_scores)
    ->ArgsProduct({{128, 256, 512, 1024}, {4, 16, 64}})
    ->Complexity(benchmark::oNSquared);
BENCHMARK(bm_compute_scores_weighted)->Arg(256)->Arg(1024);
BENCHMARK(bm_compute_scores_workers)->Arg(1)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(bm_knn_scores)->RangeMultiplier(4)->Range(128, 2048)->Complexity(benchmark::oNSquared);
BENCHMARK(bm_hbos_scores)->RangeMultiplier(4)->Range(1024, 16384)->Complexity(benchmark::oN);

BENCHMARK_MAIN();
