#pragma once

#include "mgritcl/flux.hpp"
#include "mgritcl/grid.hpp"
#include "mgritcl/mgrit.hpp"
#include "mgritcl/models.hpp"
#include "mgritcl/stepper.hpp"

#include <functional>

namespace mgritcl {

using InitialCondition = std::function<StateVector(double x)>;

// Cell averages approximated by midpoint samples ic(x_i + dx/2).
StateField discretise_ic(const InitialCondition& ic, const SpatialGrid& grid);

struct SerialRun {
    SpaceTimeTrajectory trajectory;
    double wall_time = 0.0;
    double max_cfl_observed = 0.0;
    bool diverged = false;
};

// Sequential time stepping of u0 over `steps` applications of phi. On
// divergence the remaining nodes are filled with NaN and the run is flagged.
std::vector<StateField> propagate_serial(const Propagator& phi, const StateField& u0, int steps,
                                         bool* diverged = nullptr);

SerialRun solve_serial(const ConservationModel& model, const SpatialGrid& grid, const TemporalGrid& temporal,
                       const FluxConfig& flux_config, const StepperSpec& stepper_spec, const InitialCondition& ic);

} // namespace mgritcl
