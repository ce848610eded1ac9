#include <benchmark/benchmark.h>

#include "feqs/characters.hpp"
#include "feqs/corpus.hpp"
#include "feqs/equations.hpp"
#include "feqs/random.hpp"

using namespace feqs;

namespace {

Semigroup p9() {
    const Semigroup n3({{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
    return direct_product(n3, n3);
}

void BenchGenerateOrder3(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(generate_semigroups(3, false));
}
BENCHMARK(BenchGenerateOrder3);

void BenchGenerateOrder3Dedup(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(generate_semigroups(3, true));
}
BENCHMARK(BenchGenerateOrder3Dedup);

void BenchEnumerateCharactersP9(benchmark::State& state) {
    const Semigroup s = p9();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_multiplicative(s));
}
BENCHMARK(BenchEnumerateCharactersP9);

void BenchEnumerateAutomorphismsP9(benchmark::State& state) {
    const Semigroup s = p9();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_automorphisms(s));
}
BENCHMARK(BenchEnumerateAutomorphismsP9);

void BenchNullspaceP9(benchmark::State& state) {
    const Semigroup s = p9();
    const EquationSpec spec(s, Sign::Plus, identity_automorphism(s), DiracCombination::dirac(8));
    SeededRng rng(0, "bench-nullspace");
    const CFunction g = rng.next_cfunction(9);
    const NumericPolicy policy;
    for (auto _ : state)
        benchmark::DoNotOptimize(nullspace(assemble_linear_system(spec, g), policy));
}
BENCHMARK(BenchNullspaceP9);

void BenchResidualSweepP9(benchmark::State& state) {
    const Semigroup s = p9();
    const EquationSpec spec(s, Sign::Plus, identity_automorphism(s), DiracCombination::dirac(8));
    const auto chars = enumerate_multiplicative(s);
    const CFunction f = chars.back().materialized;
    for (auto _ : state) benchmark::DoNotOptimize(residual_max(spec, f, f));
}
BENCHMARK(BenchResidualSweepP9);

}  // namespace

BENCHMARK_MAIN();
