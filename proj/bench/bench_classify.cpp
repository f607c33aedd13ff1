#include <benchmark/benchmark.h>

#include "nsl/classify.hpp"

namespace {

// Arg selects the semigroup; larger index means larger Frobenius number.
nsl::SemigroupPtr pick(std::int64_t i) {
    switch (i) {
    case 0: return nsl::semigroup_from_generators({5, 6, 8});
    case 1: return nsl::semigroup_from_generators({7, 9, 10, 12});
    default: return nsl::semigroup_from_generators({8, 11, 13, 14, 15});
    }
}

void BM_classify_serial(benchmark::State& state) {
    auto S = pick(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nsl::classify_serial(S));
}

void BM_classify_parallel(benchmark::State& state) {
    auto S = pick(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nsl::classify(S));
    state.counters["threads"] = nsl::parallel_thread_count();
}

void BM_colon_table_serial(benchmark::State& state) {
    auto ids = nsl::enumerate_normalized_ideals(pick(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(nsl::colon_table_serial(ids));
    state.counters["ideals"] = static_cast<double>(ids.size());
}

void BM_colon_table_parallel(benchmark::State& state) {
    auto ids = nsl::enumerate_normalized_ideals(pick(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(nsl::colon_table(ids));
    state.counters["ideals"] = static_cast<double>(ids.size());
    state.counters["threads"] = nsl::parallel_thread_count();
}

} // namespace

BENCHMARK(BM_classify_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_classify_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_colon_table_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_colon_table_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
