#include <benchmark/benchmark.h>

#include "unirep/clebsch.hpp"
#include "unirep/intertwine.hpp"
#include "unirep/tensorsocle.hpp"
#include "unirep/uniserial.hpp"

using namespace unirep;

static void CgUncached(benchmark::State& state) {
    const int dj = static_cast<int>(state.range(0));
    for (auto _ : state) {
        cg_cache_clear();
        Scalar acc;
        for (int dm1 = -dj; dm1 <= dj; dm1 += 2)
            acc += cg_doubled(dj, dm1, dj, -dm1, 0, 0);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(CgUncached)->Arg(6)->Arg(12)->Arg(24);

static void CgMemoized(benchmark::State& state) {
    const int dj = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Scalar acc;
        for (int dm1 = -dj; dm1 <= dj; dm1 += 2)
            acc += cg_doubled(dj, dm1, dj, -dm1, 0, 0);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(CgMemoized)->Arg(12)->Arg(24);

static void ScalarInverse(benchmark::State& state) {
    const Scalar a = Scalar(3) + sqrt_rational(Rational(2)) + sqrt_rational(Rational(15)) -
                     Scalar(Rational(1, 2)) * sqrt_rational(Rational(6));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.inverse());
    }
}
BENCHMARK(ScalarInverse);

static void SocleFaithfulPair(benchmark::State& state) {
    const int a0 = static_cast<int>(state.range(0));
    const Representation v = build(ModuleSpec(SpecFUplus{a0}, 1, Mode::heisenberg));
    for (auto _ : state) {
        const GradedModule g = tensor_product(v, v);
        benchmark::DoNotOptimize(socle(g));
    }
}
BENCHMARK(SocleFaithfulPair)->Arg(1)->Arg(3)->Arg(5);

static void HomFaithful(benchmark::State& state) {
    const Representation v = build(ModuleSpec(SpecFU{1, 4, 1}, 3, Mode::heisenberg));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hom_space(v, v));
    }
}
BENCHMARK(HomFaithful);

BENCHMARK_MAIN();
