#include <random>

#include <benchmark/benchmark.h>

#include "asdlab/classical.hpp"
#include "asdlab/curve.hpp"
#include "asdlab/padic.hpp"
#include "asdlab/series.hpp"

using namespace asdlab;
using PSeries = Series<PadicCoeffRing>;

namespace {

PSeries rand_series(const PadicCoeffRing& ring, std::mt19937_64& rng, long len,
                    bool unit_lead = false) {
    std::vector<u128> c(static_cast<size_t>(len));
    for (auto& x : c) x = make_u128(rng(), rng()) % ring.modulus();
    if (unit_lead)
        while (c[0] % static_cast<u128>(ring.prime()) == 0)
            c[0] = make_u128(rng(), rng()) % ring.modulus();
    return PSeries(ring, 0, std::move(c));
}

} // namespace

static void BM_mul_kronecker(benchmark::State& state) {
    PadicCoeffRing R(11, 23);
    std::mt19937_64 rng(1);
    PSeries f = rand_series(R, rng, state.range(0));
    PSeries g = rand_series(R, rng, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(f * g);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_mul_kronecker)->RangeMultiplier(8)->Range(1 << 10, 1 << 19)->Complexity();

static void BM_mul_schoolbook(benchmark::State& state) {
    PadicCoeffRing R(11, 23);
    std::mt19937_64 rng(2);
    PSeries f = rand_series(R, rng, state.range(0));
    PSeries g = rand_series(R, rng, state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(R.poly_mul_schoolbook(f.data(), g.data()));
}
BENCHMARK(BM_mul_schoolbook)->Arg(512)->Arg(2048);

static void BM_inverse(benchmark::State& state) {
    PadicCoeffRing R(11, 23);
    std::mt19937_64 rng(3);
    PSeries f = rand_series(R, rng, state.range(0), true);
    for (auto _ : state) benchmark::DoNotOptimize(inverse(f));
}
BENCHMARK(BM_inverse)->Arg(1 << 12)->Arg(1 << 16);

static void BM_u_p(benchmark::State& state) {
    PadicCoeffRing R(11, 23);
    std::mt19937_64 rng(4);
    PSeries f = rand_series(R, rng, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(u_p(f, 11));
}
BENCHMARK(BM_u_p)->Arg(1 << 16)->Arg(1 << 20);

static void BM_theta(benchmark::State& state) {
    PadicCoeffRing R(11, 23);
    std::mt19937_64 rng(5);
    PSeries f = rand_series(R, rng, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(theta(f));
}
BENCHMARK(BM_theta)->Arg(1 << 16)->Arg(1 << 20);

static void BM_delta(benchmark::State& state) {
    PadicCoeffRing R(11, 23);
    for (auto _ : state) benchmark::DoNotOptimize(delta(state.range(0), R));
}
BENCHMARK(BM_delta)->Arg(10000)->Arg(100000);

static void BM_basis(benchmark::State& state) {
    PadicCoeffRing R(11, 23);
    for (auto _ : state)
        benchmark::DoNotOptimize(zhang_basis(state.range(0), R));
}
BENCHMARK(BM_basis)->Arg(10648)->Unit(benchmark::kMillisecond);

static void BM_count_points(benchmark::State& state) {
    WeierstrassCurve E = reduce_curve(zhang_curve(), state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_points(E, state.range(0)));
}
BENCHMARK(BM_count_points)->Arg(1009)->Arg(10007)->Arg(100003);

static void BM_unit_root(benchmark::State& state) {
    PadicContext ctx(11, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(unit_root(4, ctx));
}
BENCHMARK(BM_unit_root)->Arg(50)->Arg(500);

BENCHMARK_MAIN();
