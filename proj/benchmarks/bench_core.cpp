// Micro-benchmarks for the numerics that dominate experiment wall time.

#include <benchmark/benchmark.h>

#include <cmath>

#include "ncwave/fft.hpp"
#include "ncwave/fourier.hpp"
#include "ncwave/gabor.hpp"
#include "ncwave/grid.hpp"
#include "ncwave/signal.hpp"
#include "ncwave/special.hpp"

using namespace ncwave;

static void BM_QuadratureClosed(benchmark::State& state) {
    Grid1D g = Grid1D::closed(-8.0, 8.0, std::size_t(state.range(0)));
    std::vector<double> f(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) f[i] = std::exp(-g.point(i) * g.point(i));
    for (auto _ : state) benchmark::DoNotOptimize(quadrature_integrate(f, g));
}
BENCHMARK(BM_QuadratureClosed)->Arg(1 << 10)->Arg(1 << 14);

static void BM_FftForward(benchmark::State& state) {
    std::vector<cplx> data(std::size_t(state.range(0)));
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = cplx(std::sin(0.01 * double(i)), 0.0);
    for (auto _ : state) {
        auto copy = data;
        fft_forward(copy);
        benchmark::DoNotOptimize(copy.data());
    }
}
BENCHMARK(BM_FftForward)->Arg(1 << 9)->Arg(1 << 12)->Arg(1 << 16);

static void BM_HermiteValues(benchmark::State& state) {
    std::vector<double> buf(std::size_t(state.range(0)));
    double u = 1.7;
    for (auto _ : state) {
        hermite_values(buf.size(), u, buf.data());
        benchmark::DoNotOptimize(buf.data());
        u = -u;
    }
}
BENCHMARK(BM_HermiteValues)->Arg(32)->Arg(128);

static void BM_BesselAll(benchmark::State& state) {
    std::vector<double> buf(std::size_t(state.range(0)) + 1);
    for (auto _ : state) {
        bessel_j_all(int(state.range(0)), 23.4, buf.data());
        benchmark::DoNotOptimize(buf.data());
    }
}
BENCHMARK(BM_BesselAll)->Arg(16)->Arg(64);

static void BM_FourierEuclidean1D(benchmark::State& state) {
    auto g = make_euclidean({Grid1D::periodic(-8.0, 8.0, std::size_t(state.range(0)))});
    SampledSignal f = make_signal(g, {GaussianFactor{1.0, 0.0}});
    for (auto _ : state) benchmark::DoNotOptimize(fourier_euclidean(f).dual_energy());
}
BENCHMARK(BM_FourierEuclidean1D)->Arg(1 << 10)->Arg(1 << 12);

static void BM_FourierHeisenberg(benchmark::State& state) {
    auto g = make_heisenberg1(Grid1D::periodic(-6.0, 6.0, 32), Grid1D::periodic(-6.0, 6.0, 32),
                              Grid1D::periodic(-12.0, 12.0, 32));
    SampledSignal f = make_signal(
        g, {GaussianFactor{1.0, 0.0}, GaussianFactor{1.0, 0.0}, GaussianFactor{4.0, 0.0}});
    DualOptions opts;
    opts.n_lambda = 8;
    opts.hermite_order = std::size_t(state.range(0));
    opts.n_u = 128;
    for (auto _ : state)
        benchmark::DoNotOptimize(fourier_heisenberg(f, opts).dual_energy());
}
BENCHMARK(BM_FourierHeisenberg)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_FourierMotion2(benchmark::State& state) {
    auto g = make_motion2(16, Grid1D::periodic(-6.0, 6.0, 24), Grid1D::periodic(-6.0, 6.0, 24));
    SampledSignal f = make_signal(
        g, {TrigFactor{1.0, {0.5}, {}}, GaussianFactor{1.0, 0.3}, GaussianFactor{1.0, 0.0}});
    DualOptions opts;
    opts.n_r = 8;
    opts.mode_cutoff = int(state.range(0));
    Motion2Path path = state.range(1) ? Motion2Path::Bessel : Motion2Path::Direct;
    for (auto _ : state)
        benchmark::DoNotOptimize(fourier_motion2(f, opts, path).dual_energy());
}
BENCHMARK(BM_FourierMotion2)
    ->Args({8, 0})
    ->Args({8, 1})
    ->Args({16, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_GaborEuclidean(benchmark::State& state) {
    auto g = make_euclidean({Grid1D::periodic(-8.0, 8.0, 512)});
    SampledSignal f = make_signal(g, {GaussianFactor{1.0, 0.0}});
    Window psi{make_signal(g, {GaussianFactor{1.0, 0.0}})};
    BaseGrid base{{std::size_t(state.range(0))}};
    for (auto _ : state)
        benchmark::DoNotOptimize(gabor_transform(f, psi, base).coeffs.data());
}
BENCHMARK(BM_GaborEuclidean)->Arg(16)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
