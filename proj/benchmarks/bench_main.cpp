#include "nt/analytic.hpp"
#include "nt/arith.hpp"
#include "nt/kloosterman.hpp"
#include "nt/zagier.hpp"

#include <benchmark/benchmark.h>

using namespace nt;

static void BM_Kronecker(benchmark::State& st) {
    i64 acc = 0;
    for (auto _ : st) {
        for (i64 a = -500; a < 500; ++a) acc += kronecker(a, 100003);
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_Kronecker);

static void BM_Factorize(benchmark::State& st) {
    BigInt n = BigInt("1000000000039") * BigInt("1000000000061");
    for (auto _ : st) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_Factorize);

// literal enumeration against the periodic evaluator on the same (v, r)
static void BM_LocalSumNaive(benchmark::State& st) {
    auto Q = Field::rationals();
    LocalKloosterman L(Q, Q.primes_above(3)[0], AlgInt(4 * 27));
    for (auto _ : st) benchmark::DoNotOptimize(L.naive(static_cast<unsigned>(st.range(0)), 3));
}
BENCHMARK(BM_LocalSumNaive)->Arg(2)->Arg(4);

static void BM_LocalSumFast(benchmark::State& st) {
    auto Q = Field::rationals();
    for (auto _ : st) {
        LocalKloosterman L(Q, Q.primes_above(3)[0], AlgInt(4 * 27));
        benchmark::DoNotOptimize(L.fast(static_cast<unsigned>(st.range(0)), 3));
    }
}
BENCHMARK(BM_LocalSumFast)->Arg(2)->Arg(4);

static void BM_GlobalDirichlet(benchmark::State& st) {
    auto d = EllipticDatum::rational(1, 1, 5, 1);
    for (auto _ : st) benchmark::DoNotOptimize(global_dirichlet(d, 2.0, static_cast<u64>(st.range(0))));
}
BENCHMARK(BM_GlobalDirichlet)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_CutoffF(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(cutoff_F(0.7));
}
BENCHMARK(BM_CutoffF);

static void BM_HContour(benchmark::State& st) {
    HContour H(1.0, {0});
    for (auto _ : st) benchmark::DoNotOptimize(H(3.0));
}
BENCHMARK(BM_HContour);

static void BM_FunctionalEquation(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(verify_functional_equation(45, 0.3, 1e-6));
}
BENCHMARK(BM_FunctionalEquation)->Unit(benchmark::kMillisecond);

static void BM_Afe(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(afe_verify(45, 0.5));
}
BENCHMARK(BM_Afe)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
