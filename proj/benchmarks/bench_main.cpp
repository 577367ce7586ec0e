#include "fdist/chromatic.hpp"
#include "fdist/distance_classes.hpp"
#include "fdist/distance_graph.hpp"
#include "fdist/extremal.hpp"
#include "fdist/line_scheme.hpp"
#include "fdist/point_set.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace fdist;

static void BM_Classify(benchmark::State& state) {
    const PointSet ps = generate_grid(2, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(classify(ps).class_count());
    state.SetLabel(std::to_string(ps.size()) + " points");
}
BENCHMARK(BM_Classify)->Arg(4)->Arg(8)->Arg(12);

static void BM_ChromaticExact(benchmark::State& state) {
    const DistanceClassMatrix m = classify(generate_grid(2, static_cast<std::size_t>(state.range(0)), 1));
    const std::vector<ClassId> forbid{1, 2};  // squared 1 and 2
    const DistanceGraph g = build_graph(m, forbid);
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_exact(g).chi);
}
BENCHMARK(BM_ChromaticExact)->Arg(3)->Arg(5)->Arg(7);

static void BM_MaxKDistanceSet(benchmark::State& state) {
    const DistanceClassMatrix m = classify(generate_grid(2, 3, 1));
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(max_k_distance_set(m, k).subset.size());
}
BENCHMARK(BM_MaxKDistanceSet)->Arg(1)->Arg(2)->Arg(3);

static void BM_LineColor(benchmark::State& state) {
    const LineColoringScheme scheme(Rational::parse("3/7"), Rational::parse("22/7"));
    Rational x = Rational::parse("-1000/3");
    const Rational step = Rational::parse("17/11");
    for (auto _ : state) {
        benchmark::DoNotOptimize(scheme.color(x));
        x += step;
    }
}
BENCHMARK(BM_LineColor);

static void BM_LineVerify(benchmark::State& state) {
    const LineColoringScheme scheme(Rational::parse("3/7"), Rational::parse("22/7"));
    LineVerificationOptions options;
    options.samples = 1000;
    options.range = Rational(static_cast<std::int64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_line_scheme(scheme, options).ok());
}
BENCHMARK(BM_LineVerify)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
