#include <benchmark/benchmark.h>

#include <random>

#include "qdc/derived.hpp"
#include "qdc/distance.hpp"

using namespace qdc;

namespace {

void BM_build_context(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(FieldContext::build(m));
}
BENCHMARK(BM_build_context)->Arg(4)->Arg(6)->Arg(8);

void BM_ext_mul(benchmark::State& state) {
    auto ctx = FieldContext::build(6);
    std::mt19937_64 rng(kDefaultSeed);
    std::vector<ExtElem> xs(1024);
    for (auto& x : xs) x = ctx->alpha_pow(static_cast<int64_t>(rng() % ctx->n()));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ctx->mul(xs[i & 1023], xs[(i + 1) & 1023]));
        ++i;
    }
}
BENCHMARK(BM_ext_mul);

void BM_generator_synthesis(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    auto ctx = FieldContext::build(m);
    const DefiningSet T = defining_set(1, m, 4);
    for (auto _ : state) benchmark::DoNotOptimize(generator_from_defining_set(T, *ctx));
}
BENCHMARK(BM_generator_synthesis)->Arg(3)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_weight_distribution_m2(benchmark::State& state) {
    auto ctx = FieldContext::build(2);
    const CyclicCode C = build_code(0, 2, ctx);
    for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(C));
    state.SetItemsProcessed(state.iterations() * (uint64_t{1} << 18));
}
BENCHMARK(BM_weight_distribution_m2)->Unit(benchmark::kMillisecond);

void BM_run_search_exhaustive_m5(benchmark::State& state) {
    const DefiningSet T = defining_set(0, 5, 4);
    const auto cands = all_coprime_candidates(T.n);
    for (auto _ : state) benchmark::DoNotOptimize(bch_multiplier_search(T, cands));
    state.SetItemsProcessed(state.iterations() * cands.size());
}
BENCHMARK(BM_run_search_exhaustive_m5)->Unit(benchmark::kMillisecond);

void BM_defining_set_m8(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(defining_set(0, 8, 4));
    state.SetItemsProcessed(state.iterations() * ((uint64_t{1} << 16) - 1));
}
BENCHMARK(BM_defining_set_m8)->Unit(benchmark::kMillisecond);

void BM_gray_map(benchmark::State& state) {
    std::mt19937_64 rng(kDefaultSeed);
    Word x(1024, GF4::zero());
    for (auto& v : x) v = GF4(static_cast<uint8_t>(rng() & 3));
    for (auto _ : state) benchmark::DoNotOptimize(gray_map(x));
    state.SetItemsProcessed(state.iterations() * x.size());
}
BENCHMARK(BM_gray_map);

void BM_trace_code_m3(benchmark::State& state) {
    auto ctx = FieldContext::build(3);
    const CyclicCode C = build_code(0, 3, ctx);
    for (auto _ : state) benchmark::DoNotOptimize(trace_code(C));
}
BENCHMARK(BM_trace_code_m3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
