#include <tropcount/crossratio_mult.hpp>
#include <tropcount/recursion.hpp>

#include <benchmark/benchmark.h>

#include <numeric>

using namespace tropcount;

static void BM_Kontsevich(benchmark::State& state) {
    const auto degree = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kontsevich(degree));
}
BENCHMARK(BM_Kontsevich)->DenseRange(4, 12, 4);

// r cross-ratios on a (3 + r)-valent vertex, each on a sliding window of slots.
static VertexProfile chain_profile(std::size_t r) {
    std::vector<Slot> slots(3 + r);
    std::iota(slots.begin(), slots.end(), 1U);
    std::vector<Quadruple> quads;
    for (std::size_t i = 0; i < r; ++i) {
        const auto first = static_cast<Slot>(i + 1);
        quads.push_back(quadruple_on_slots(static_cast<CrossRatioId>(i + 1),
                                           {first, first + 1, first + 2, first + 3}));
    }
    return VertexProfile(slots, quads);
}

static void BM_CrossRatioMultiplicity(benchmark::State& state) {
    const VertexProfile profile = chain_profile(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cross_ratio_multiplicity(profile));
}
BENCHMARK(BM_CrossRatioMultiplicity)->DenseRange(1, 5);

static Instance worked_example() {
    return make_instance({2, {1, 2, 3}, {{4, 1}, {5, 1}}, {}, {{1, 2, 3, 4}, {1, 2, 3, 5}}});
}

static Instance degree_three() {
    return make_instance({3, {1, 2, 3, 4, 5}, {{6, 1}, {7, 2}, {8, 1}}, {},
                          {{1, 2, 3, 6}, {1, 4, 5, 7}, {2, 3, 6, 8}}});
}

static void BM_EvaluateWorkedExample(benchmark::State& state) {
    const Instance inst = worked_example();
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(inst));
}
BENCHMARK(BM_EvaluateWorkedExample);

static void BM_EvaluateDegreeThree(benchmark::State& state) {
    const Instance inst = degree_three();
    EvaluationOptions options;
    options.jobs = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(inst, options));
}
BENCHMARK(BM_EvaluateDegreeThree)->Arg(1)->Arg(4);

BENCHMARK_MAIN();
