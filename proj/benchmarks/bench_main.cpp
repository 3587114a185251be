#include "mgritcl/harness.hpp"
#include "mgritcl/mgrit.hpp"
#include "mgritcl/serial.hpp"
#include "mgritcl/stepper.hpp"

#include <benchmark/benchmark.h>

using namespace mgritcl;

namespace {

ExperimentConfig burgers_config(int nx, int weno_order, FluxKind flux) {
    ExperimentConfig c = parse_config("problem = burgers\nic = sin-stationary\nstepper = SSPRK3\n");
    c.n_cells = nx;
    c.weno_orders.assign(c.mgrit.n_levels, weno_order);
    c.fluxes.assign(c.mgrit.n_levels, flux);
    return c;
}

void BM_RhsBurgers(benchmark::State& state) {
    const auto c = burgers_config(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), FluxKind::Roe);
    const SemiDiscreteOperator op(c.model(), c.spatial_grid(), c.flux_config(0));
    const StateField u = discretise_ic(c.initial_condition(), c.spatial_grid());
    for (auto _ : state) benchmark::DoNotOptimize(op(u));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RhsBurgers)->ArgsProduct({{128, 1024}, {1, 3, 5, 7}});

void BM_RhsEulerCharacteristic(benchmark::State& state) {
    ExperimentConfig c = parse_config("problem = euler\nic = euler-energy-sin\nflux = roe\nweno_order = 5\n");
    c.n_cells = static_cast<int>(state.range(0));
    const SemiDiscreteOperator op(c.model(), c.spatial_grid(), c.flux_config(0));
    const StateField u = discretise_ic(c.initial_condition(), c.spatial_grid());
    for (auto _ : state) benchmark::DoNotOptimize(op(u));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RhsEulerCharacteristic)->Arg(128)->Arg(1024);

void BM_Stepper(benchmark::State& state) {
    const auto kind = static_cast<StepperKind>(state.range(0));
    const auto c = burgers_config(256, 5, FluxKind::LaxFriedrichs);
    const SemiDiscreteOperator op(c.model(), c.spatial_grid(), c.flux_config(0));
    const StateField u = discretise_ic(c.initial_condition(), c.spatial_grid());
    StepperSpec spec{kind, kind == StepperKind::MatchedLF0 || kind == StepperKind::MatchedLF1 ? 16 : 1};
    const TimeStepper phi = make_stepper(spec, op, 1e-4);
    for (auto _ : state) benchmark::DoNotOptimize(phi(u));
    state.SetLabel(to_string(kind));
}
BENCHMARK(BM_Stepper)
    ->Arg(static_cast<int>(StepperKind::ForwardEuler))
    ->Arg(static_cast<int>(StepperKind::SSPRK3))
    ->Arg(static_cast<int>(StepperKind::LaxFriedrichsFine))
    ->Arg(static_cast<int>(StepperKind::MatchedLF1));

void BM_VCycle(benchmark::State& state) {
    const ExperimentConfig c = parse_config("problem = burgers\nic = sin-stationary\nT = 0.475\nN_x = 128\n"
                                            "N_t = 1024\nn_levels = 5\nm = 2\nstepper = LF-FE\ncoarse = matched1\n");
    MgritOptions opts = c.mgrit;
    opts.parallelism = static_cast<int>(state.range(0));
    const StateField u0 = discretise_ic(c.initial_condition(), c.spatial_grid());
    for (auto _ : state) {
        MgritHierarchy h(opts, build_propagators(c), u0, c.n_steps);
        h.cycle();
        benchmark::DoNotOptimize(h.fine_iterate());
    }
}
BENCHMARK(BM_VCycle)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
