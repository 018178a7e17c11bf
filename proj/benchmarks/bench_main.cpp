#include <benchmark/benchmark.h>

#include <specgap/ball.hpp>
#include <specgap/gap_analysis.hpp>
#include <specgap/modulus.hpp>
#include <specgap/tridiag.hpp>

namespace {

using namespace specgap;

void BM_TridiagEigenvalues(benchmark::State& state) {
    const ModelParams p{4, 1.0, 1.5};
    const Grid g = Grid::over(-p.D / 2, p.D / 2, static_cast<int>(state.range(0)));
    const SymTridiag T = build_normal_form_matrix(p, g);
    for (auto _ : state) {
        auto v = eig_tridiag_smallest_values(T, 2);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_TridiagEigenvalues)->Arg(500)->Arg(2000)->Arg(8000);

void BM_Shoot(benchmark::State& state) {
    const ModelParams p{4, 1.0, 2.0};
    for (auto _ : state) {
        double v = shoot(p, 10.0, Parity::Even);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_Shoot);

void BM_SolveModel(benchmark::State& state) {
    const ModelParams p{3, 1.0, 1.5};
    SolveOptions opt;
    opt.grid_m = static_cast<int>(state.range(0));
    opt.method = state.range(1) ? Method::Both : Method::Tridiag;
    for (auto _ : state) {
        SolveReport rep = solve_model(p, opt);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_SolveModel)->Args({500, 0})->Args({2000, 0})->Args({2000, 1});

void BM_BallSpectrum(benchmark::State& state) {
    const BallSpec spec{3, 1.0, 0.7};
    for (auto _ : state) {
        BallSpectrum b = ball_spectrum(spec);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_BallSpectrum);

void BM_ModulusResiduals(benchmark::State& state) {
    const ModelParams p{3, 1.0, 1.0};
    const SolveReport rep = solve_model(p);
    for (auto _ : state) {
        const LogDerivativeProfile prof = log_derivative_profile(rep);
        double r = riccati_residual(prof) + second_order_residual(prof);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ModulusResiduals);

}  // namespace

BENCHMARK_MAIN();
