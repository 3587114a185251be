#include "mgritcl/serial.hpp"

#include "mgritcl/errors.hpp"

#include <chrono>
#include <limits>

namespace mgritcl {

StateField discretise_ic(const InitialCondition& ic, const SpatialGrid& grid) {
    const StateVector first = ic(grid.centre(0));
    StateField field(static_cast<int>(first.size()), grid.cells());
    field.set_cell(0, first);
    for (int i = 1; i < grid.cells(); ++i) {
        field.set_cell(i, ic(grid.centre(i)));
    }
    return field;
}

std::vector<StateField> propagate_serial(const Propagator& phi, const StateField& u0, int steps, bool* diverged) {
    std::vector<StateField> states;
    states.reserve(steps + 1);
    states.push_back(u0);
    bool failed = false;
    for (int n = 1; n <= steps; ++n) {
        if (!failed) {
            try {
                StateField next = phi(states.back());
                failed = !next.all_finite();
                if (!failed) {
                    states.push_back(std::move(next));
                    continue;
                }
            } catch (const PhysicalStateError&) {
                failed = true;
            }
        }
        StateField nan_field = u0;
        nan_field.values().setConstant(std::numeric_limits<double>::quiet_NaN());
        states.push_back(std::move(nan_field));
    }
    if (diverged) {
        *diverged = failed;
    }
    return states;
}

SerialRun solve_serial(const ConservationModel& model, const SpatialGrid& grid, const TemporalGrid& temporal,
                       const FluxConfig& flux_config, const StepperSpec& stepper_spec, const InitialCondition& ic) {
    const auto start = std::chrono::steady_clock::now();
    const SemiDiscreteOperator op(model, grid, flux_config);
    const TimeStepper stepper = make_stepper(stepper_spec, op, temporal.dt());
    const StateField u0 = discretise_ic(ic, grid);
    if (u0.components() != model.components()) {
        throw ConfigError("initial condition does not match the model's component count");
    }

    bool diverged = false;
    auto states = propagate_serial(stepper, u0, temporal.steps(), &diverged);
    SerialRun run{SpaceTimeTrajectory(temporal, std::move(states))};
    run.diverged = diverged;
    if (!diverged) {
        run.max_cfl_observed = max_cfl(run.trajectory, model, stepper.advance(), grid.dx());
    }
    run.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return run;
}

} // namespace mgritcl
