#include "qtri/autos.hpp"
#include "qtri/expr.hpp"
#include "qtri/random.hpp"
#include "qtri/structure.hpp"
#include "qtri/triangular.hpp"

#include <benchmark/benchmark.h>

using namespace qtri;

static void BM_ElementMul(benchmark::State& state) {
    TriangularAlgebra alg(static_cast<int>(state.range(0)), true);
    RandomSource rng(1);
    std::vector<Element> xs;
    for (int k = 0; k < 64; ++k) xs.push_back(rng.element(alg.algebra()));
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(xs[k % 64] * xs[(k + 1) % 64]);
        ++k;
    }
}
BENCHMARK(BM_ElementMul)->Arg(2)->Arg(4)->Arg(6);

static void BM_Antipode(benchmark::State& state) {
    TriangularAlgebra alg(static_cast<int>(state.range(0)), true);
    RandomSource rng(2);
    std::vector<Element> xs;
    for (int k = 0; k < 16; ++k) xs.push_back(rng.element(alg.algebra(), 3));
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(alg.antipode(xs[k++ % 16]));
}
BENCHMARK(BM_Antipode)->Arg(3)->Arg(4);

static void BM_BuildUT(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(TriangularAlgebra(static_cast<int>(state.range(0)), true));
}
BENCHMARK(BM_BuildUT)->Arg(3)->Arg(5);

static void BM_CommutationLemmas(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(check_commutation_lemmas(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CommutationLemmas)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Coproduct(benchmark::State& state) {
    TriangularAlgebra alg(4, false);
    RandomSource rng(3);
    const Element x = rng.element(alg.algebra());
    for (auto _ : state) benchmark::DoNotOptimize(alg.coproduct_spec().apply(x));
}
BENCHMARK(BM_Coproduct);

static void BM_SextupleCompose(benchmark::State& state) {
    RandomSource rng(4);
    const Sextuple a = random_sextuple(rng), b = random_sextuple(rng);
    for (auto _ : state) benchmark::DoNotOptimize(g_compose(a, b));
}
BENCHMARK(BM_SextupleCompose);

static void BM_ParseFormat(benchmark::State& state) {
    TriangularAlgebra alg(3, true);
    RandomSource rng(5);
    const std::string text = format(rng.element(alg.algebra()));
    for (auto _ : state) benchmark::DoNotOptimize(format(parse(text, alg)));
}
BENCHMARK(BM_ParseFormat);
BENCHMARK_MAIN();
