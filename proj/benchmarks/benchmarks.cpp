#include <benchmark/benchmark.h>

#include <random>

#include "eliminant/chow.hpp"
#include "eliminant/io.hpp"
#include "eliminant/resultant.hpp"

using namespace eliminant;

static RingPtr zz3() {
    return RingCtx::make({"x", "y", "z"}, CoeffDomain::integers(),
                         MonomialOrder::grevlex());
}

static HomSystem worked_example() {
    auto R = zz3();
    return make_hom_system({parse_poly("x^3 + y^2*z", R),
                            parse_poly("x*y + y^2 + x*z + y*z", R),
                            parse_poly("y^4 + z^4", R)});
}

static void BM_ResultantPoisson(benchmark::State& state) {
    auto sys = worked_example();
    for (auto _ : state)
        benchmark::DoNotOptimize(poisson_resultant(sys).value);
}
BENCHMARK(BM_ResultantPoisson);

static void BM_ResultantMacaulay(benchmark::State& state) {
    auto sys = worked_example();
    for (auto _ : state)
        benchmark::DoNotOptimize(macaulay_resultant(sys).value);
}
BENCHMARK(BM_ResultantMacaulay);

static void BM_BareissDet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-99, 99);
    ExactMatrix M(n, n, CoeffDomain::integers());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M.at(i, j) = Coeff(Rat(c(rng)));
    for (auto _ : state)
        benchmark::DoNotOptimize(det(M, DetStrategy::Bareiss));
}
BENCHMARK(BM_BareissDet)->Arg(8)->Arg(16)->Arg(32);

static void BM_TwistedCubicChowForm(benchmark::State& state) {
    Ideal C = kernel(veronese(1, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(chow_form(C).element.rep);
}
BENCHMARK(BM_TwistedCubicChowForm);

static void BM_GroebnerKernelVeronese(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel(veronese(1, d)).gens());
}
BENCHMARK(BM_GroebnerKernelVeronese)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
