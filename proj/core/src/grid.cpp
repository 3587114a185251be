#include "mgritcl/grid.hpp"

#include "mgritcl/errors.hpp"
#include "mgritcl/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mgritcl {

SpatialGrid::SpatialGrid(double length, int n_cells)
    : length_(length), n_cells_(n_cells), dx_(length / n_cells) {
    if (!(length > 0.0) || n_cells <= 0) {
        throw ConfigError("spatial grid needs L > 0 and N_x > 0");
    }
}

TemporalGrid::TemporalGrid(double horizon, int n_steps)
    : horizon_(horizon), n_steps_(n_steps), dt_(horizon / n_steps) {
    if (!(horizon > 0.0) || n_steps <= 0) {
        throw ConfigError("temporal grid needs T > 0 and N_t > 0");
    }
}

TemporalGrid TemporalGrid::coarsened(int factor) const {
    if (factor <= 0 || n_steps_ % factor != 0) {
        throw ConfigError("cannot coarsen " + std::to_string(n_steps_) + " intervals by " +
                          std::to_string(factor));
    }
    return TemporalGrid(horizon_, n_steps_ / factor);
}

StateField::StateField(int n_components, int n_cells)
    : values_(Eigen::MatrixXd::Zero(n_components, n_cells)) {
    if (n_components < 1 || n_components > 3 || n_cells <= 0) {
        throw DimensionError("state field needs 1..3 components and at least one cell");
    }
}

StateField::StateField(Eigen::MatrixXd values) : values_(std::move(values)) {}

StateField StateField::constant(const StateVector& state, int n_cells) {
    StateField field(static_cast<int>(state.size()), n_cells);
    field.values_.colwise() = state;
    return field;
}

StateVector StateField::cell_sum() const { return values_.rowwise().sum(); }

bool StateField::all_finite() const { return values_.allFinite(); }

SpaceTimeTrajectory::SpaceTimeTrajectory(TemporalGrid grid_, std::vector<StateField> states_)
    : grid(grid_), states(std::move(states_)) {
    if (static_cast<int>(states.size()) != grid.nodes()) {
        throw DimensionError("trajectory holds " + std::to_string(states.size()) + " states for " +
                             std::to_string(grid.nodes()) + " nodes");
    }
}

bool SpaceTimeTrajectory::all_finite() const {
    return std::all_of(states.begin(), states.end(), [](const StateField& s) { return s.all_finite(); });
}

double rel_l2_spacetime_error(const std::vector<StateField>& u, const std::vector<StateField>& ref) {
    if (u.size() != ref.size()) {
        throw DimensionError("trajectories differ in node count");
    }
    double diff = 0.0;
    double norm = 0.0;
    for (std::size_t n = 0; n < u.size(); ++n) {
        if (u[n].components() != ref[n].components() || u[n].cells() != ref[n].cells()) {
            throw DimensionError("trajectories differ in shape at node " + std::to_string(n));
        }
        diff += (u[n].values() - ref[n].values()).squaredNorm();
        norm += ref[n].squared_norm();
    }
    if (norm == 0.0) {
        throw DegenerateReferenceError("reference trajectory has zero norm");
    }
    return std::sqrt(diff / norm);
}

double rel_l2_spacetime_error(const SpaceTimeTrajectory& u, const SpaceTimeTrajectory& ref) {
    if (u.grid.steps() != ref.grid.steps()) {
        throw DimensionError("trajectories live on different temporal grids");
    }
    return rel_l2_spacetime_error(u.states, ref.states);
}

double max_cfl(const StateField& field, const ConservationModel& model, double dt, double dx) {
    if (!field.all_finite()) {
        throw DivergenceError("non-finite state while evaluating CFL number");
    }
    double speed = 0.0;
    for (int i = 0; i < field.cells(); ++i) {
        speed = std::max(speed, model.max_wave_speed(field.cell(i)));
    }
    return speed * dt / dx;
}

double max_cfl(const SpaceTimeTrajectory& traj, const ConservationModel& model, double dt, double dx) {
    double c = 0.0;
    for (const auto& s : traj.states) {
        c = std::max(c, max_cfl(s, model, dt, dx));
    }
    return c;
}

} // namespace mgritcl
