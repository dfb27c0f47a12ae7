// Microbenchmarks for the hot paths: the generic matching solve, spectrum
// construction, the RK4 cross-check integrator, and the energy sweep.
//
// All cases run on wells with m = 1 so timings stay comparable; results
// are consumed with DoNotOptimize so the solves cannot be elided.

#include <benchmark/benchmark.h>

#include "diracwell/matching.hpp"
#include "diracwell/observables.hpp"
#include "diracwell/oracle.hpp"
#include "diracwell/spectrum.hpp"
#include "diracwell/sweep.hpp"
#include "diracwell/well.hpp"

namespace {

const diracwell::WellParams kDeep(1.0, 5.0, 1.0);
const diracwell::WellParams kWide(1.0, 5.0, 10.0);

void BM_ScatteringSolve(benchmark::State& state) {
    for (auto _ : state) {
        auto sol = diracwell::full_solution(2.0, kDeep);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(BM_ScatteringSolve);

void BM_BoundZoneSolve(benchmark::State& state) {
    for (auto _ : state) {
        auto sol = diracwell::full_solution(-0.5, kDeep);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(BM_BoundZoneSolve);

void BM_KleinSpectrumClosedForm(benchmark::State& state) {
    for (auto _ : state) {
        auto states = diracwell::klein_spectrum(kWide);
        benchmark::DoNotOptimize(states);
    }
}
BENCHMARK(BM_KleinSpectrumClosedForm);

void BM_KleinRootScan(benchmark::State& state) {
    for (auto _ : state) {
        auto roots = diracwell::scan_klein_roots(kWide);
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_KleinRootScan);

void BM_ConventionalSpectrum(benchmark::State& state) {
    for (auto _ : state) {
        auto states = diracwell::conventional_spectrum(kDeep);
        benchmark::DoNotOptimize(states);
    }
}
BENCHMARK(BM_ConventionalSpectrum);

// RK4 across the interior region; cost includes the built-in half-step
// guard rerun. The argument is the step count of the coarse run.
void BM_Rk4Interior(benchmark::State& state) {
    const diracwell::Spinor psi0{{1.0, 0.0}, {0.25, 0.1}};
    const int n_steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto report =
            diracwell::integrate_dirac(2.0, kDeep, psi0, 0.0, kDeep.a, n_steps);
        benchmark::DoNotOptimize(report);
    }
    state.SetItemsProcessed(state.iterations() * n_steps * 3);
}
BENCHMARK(BM_Rk4Interior)->Arg(2000)->Arg(8000);

void BM_CurrentProfile(benchmark::State& state) {
    const auto sol = diracwell::full_solution(2.0, kDeep);
    for (auto _ : state) {
        auto profile = diracwell::current_profile(sol);
        benchmark::DoNotOptimize(profile);
    }
}
BENCHMARK(BM_CurrentProfile);

void BM_EnergySweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto result = diracwell::sweep(kDeep, -6.5, 3.0, n);
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_EnergySweep)->Arg(101)->Arg(1001);

}  // namespace

BENCHMARK_MAIN();
