#include <benchmark/benchmark.h>

#include "minorb/bridge.hpp"
#include "minorb/chevalley.hpp"
#include "minorb/quadform.hpp"
#include "minorb/weyl.hpp"
#include "minorb/window.hpp"

using namespace minorb;

static void BM_bracket(benchmark::State& state) {
    Rng rng(1);
    Bivector a = random_orbit_point(rng), b = random_orbit_point(rng);
    for (auto _ : state) {
        Bivector c = bracket(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_bracket);

static void BM_kostant_rank(benchmark::State& state) {
    for (auto _ : state) {
        KostantRankReport r = kostant_rank_report(4);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_kostant_rank)->Unit(benchmark::kMillisecond);

static void BM_phi_window_roundtrip(benchmark::State& state) {
    Rng rng(2);
    Bivector p = random_orbit_point(rng);
    for (auto _ : state) {
        WindowElement w = phi_window_inv(p);
        benchmark::DoNotOptimize(phi_window(w));
    }
}
BENCHMARK(BM_phi_window_roundtrip);

static void BM_window_bracket(benchmark::State& state) {
    Rng rng(3);
    WindowElement a = random_orbit_window(rng), b = random_orbit_window(rng);
    for (auto _ : state) {
        WindowElement c = window_bracket(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_window_bracket);

static void BM_membership(benchmark::State& state) {
    Rng rng(4);
    WindowElement a = random_orbit_window(rng);
    for (auto _ : state) benchmark::DoNotOptimize(min_membership_window(a));
}
BENCHMARK(BM_membership);

static void BM_bridge_roundtrip(benchmark::State& state) {
    Rng rng(5);
    QuiverPoint p = sample_N(3, rng);
    for (auto _ : state) {
        QuiverPoint q = bridge_F_inv(bridge_F(p));
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_bridge_roundtrip);

static void BM_gg_equals_triality(benchmark::State& state) {
    Rng rng(6);
    WindowElement a = random_regular_window(rng);
    for (auto _ : state) benchmark::DoNotOptimize(gg_equals_triality(a, WeylGen::s2));
}
BENCHMARK(BM_gg_equals_triality)->Unit(benchmark::kMillisecond);

static void BM_xi(benchmark::State& state) {
    Rng rng(7);
    QuiverPoint p = sample_N(4, rng);
    for (auto _ : state) {
        BPoint b = xi(p);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_xi);

BENCHMARK_MAIN();
