#include <benchmark/benchmark.h>

#include "qtorus/fo.hpp"
#include "qtorus/lie.hpp"
#include "qtorus/scalar.hpp"
#include "qtorus/torus.hpp"
#include "qtorus/verify.hpp"

namespace {

using namespace qtorus;

void BM_ScalarMul(benchmark::State& state) {
    Rng rng(17);
    const ScalarRat a = random_scalar(rng) + random_scalar(rng);
    const ScalarRat b = random_scalar(rng) + random_scalar(rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMul);

void BM_ScalarInv(benchmark::State& state) {
    const ScalarRat a = ScalarRat(1) - ScalarRat::qpow(2 * state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_ScalarInv)->Arg(1)->Arg(8);

void BM_TorusMul(benchmark::State& state) {
    Rng rng(29);
    const TorusElem x = random_torus_elem(rng, static_cast<int>(state.range(0)), 4);
    const TorusElem y = random_torus_elem(rng, static_cast<int>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_TorusMul)->Arg(4)->Arg(16);

void BM_CasimirPower(benchmark::State& state) {
    const TorusElem c = casimir();
    for (auto _ : state) benchmark::DoNotOptimize(c.pow(state.range(0)));
}
BENCHMARK(BM_CasimirPower)->Arg(2)->Arg(4)->Arg(8);

void BM_Certificate(benchmark::State& state) {
    const long long b = state.range(0);
    for (auto _ : state) {
        const LieExpr cert = cert_monomial(b, -b, 1);
        benchmark::DoNotOptimize(cert.eval());
    }
}
BENCHMARK(BM_Certificate)->Arg(2)->Arg(4);

void BM_FoNormalize(benchmark::State& state) {
    FoWord w;
    for (long long i = 0; i < state.range(0); ++i)
        w.letters.push_back(static_cast<std::uint8_t>(3 - (i % 3)));
    const std::vector<FoWord> words{w};
    for (auto _ : state)
        benchmark::DoNotOptimize(fo_normalize(words, RewriteStrategy::LeftmostFirst));
}
BENCHMARK(BM_FoNormalize)->Arg(5)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
