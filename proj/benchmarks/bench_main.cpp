#include <benchmark/benchmark.h>

#include "mink/bounds.hpp"
#include "mink/finite_orders.hpp"
#include "mink/gcd_engine.hpp"
#include "mink/smallgroups.hpp"

using namespace mink;

static void BM_silverberg_product(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(silverberg_product(g));
}
BENCHMARK(BM_silverberg_product)->Arg(3)->Arg(10)->Arg(50);

static void BM_minkowski_field(benchmark::State& state) {
    const auto K = FieldSpec::parse("Q(zeta_9)");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        int acc = 0;
        for (const std::int64_t p : primes_up_to(n * K.degree() + 1))
            acc += r_gl_k(n, K, p);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_minkowski_field)->Arg(4)->Arg(12);

static void BM_order_classical(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(order_classical({Family::GL, 8}, 9));
}
BENCHMARK(BM_order_classical);

static void BM_empirical_exponent(benchmark::State& state) {
    const auto q = FieldSpec::rationals();
    for (auto _ : state)
        benchmark::DoNotOptimize(empirical_exponent({Family::GL, 4}, q, 3, 200, 20));
}
BENCHMARK(BM_empirical_exponent);

static void BM_closure_c4_wreath(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto gens = c4_wreath_generators(k);
    for (auto _ : state) benchmark::DoNotOptimize(closure_order(gens));
}
BENCHMARK(BM_closure_c4_wreath)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
