#include <benchmark/benchmark.h>

#include "nzeta/invariants.hpp"
#include "nzeta/ranklow.hpp"

namespace {

nzeta::Curve e0() { return nzeta::curve_from_point_counts("E0", 2, 1, {3}); }
nzeta::Curve c5() { return nzeta::curve_from_point_counts("C5", 2, 2, {3, 5}); }

void BM_SlnZeta(benchmark::State& state) {
    nzeta::Curve c = c5();
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nzeta::sl_n_zeta(c, n));
}
BENCHMARK(BM_SlnZeta)->DenseRange(2, 5);

void BM_Bundle(benchmark::State& state) {
    nzeta::Curve c = c5();
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nzeta::bundle(c, n));
}
BENCHMARK(BM_Bundle)->DenseRange(2, 4);

void BM_BetaZagier(benchmark::State& state) {
    nzeta::Curve c = c5();
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nzeta::beta_zagier(c, n, 0));
}
BENCHMARK(BM_BetaZagier)->DenseRange(4, 8);

void BM_FindRoots(benchmark::State& state) {
    nzeta::ZetaBundle b = nzeta::bundle(c5(), 3);
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nzeta::find_roots(b.numerator, prec));
}
BENCHMARK(BM_FindRoots)->Arg(128)->Arg(256)->Arg(512);

void BM_RhVerdict(benchmark::State& state) {
    nzeta::Curve c = c5();
    nzeta::ZetaBundle b = nzeta::bundle(c, 3);
    for (auto _ : state) benchmark::DoNotOptimize(nzeta::rh_verdict(b, c.q));
}
BENCHMARK(BM_RhVerdict);

void BM_Rank3Parts(benchmark::State& state) {
    nzeta::Curve c = e0();
    for (auto _ : state) benchmark::DoNotOptimize(nzeta::rank3_parts(c));
}
BENCHMARK(BM_Rank3Parts);

}  // namespace

BENCHMARK_MAIN();
