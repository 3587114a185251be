#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <vector>

namespace mgritcl {

class ConservationModel;

// Per-cell state of at most three conserved variables; stack allocated.
using StateVector = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 3, 1>;
using SmallMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 3, 3>;

// Non-negative modulo; maps any cell index onto the periodic range [0, n_cells).
constexpr int wrap_index(int i, int n_cells) noexcept {
    const int r = i % n_cells;
    return r < 0 ? r + n_cells : r;
}

class SpatialGrid {
public:
    SpatialGrid(double length, int n_cells);

    double length() const noexcept { return length_; }
    int cells() const noexcept { return n_cells_; }
    double dx() const noexcept { return dx_; }

    double centre(int i) const noexcept { return (i + 0.5) * dx_; }
    // x_{i+1/2}; interface n_cells-1/2 coincides with -1/2.
    double right_interface(int i) const noexcept { return (i + 1) * dx_; }

private:
    double length_;
    int n_cells_;
    double dx_;
};

// n_steps intervals, n_steps + 1 nodes; node i sits at i * dt and the last at T.
class TemporalGrid {
public:
    TemporalGrid(double horizon, int n_steps);

    double horizon() const noexcept { return horizon_; }
    int steps() const noexcept { return n_steps_; }
    int nodes() const noexcept { return n_steps_ + 1; }
    double dt() const noexcept { return dt_; }
    double time(int node) const noexcept { return node == n_steps_ ? horizon_ : node * dt_; }

    // Grid with n_steps / factor intervals over the same horizon.
    TemporalGrid coarsened(int factor) const;

private:
    double horizon_;
    int n_steps_;
    double dt_;
};

// Cell averages of the conserved variables at one time instant, stored as a
// D x N_x matrix so that each cell's state is a contiguous column.
class StateField {
public:
    StateField() = default;
    StateField(int n_components, int n_cells);
    explicit StateField(Eigen::MatrixXd values);

    static StateField constant(const StateVector& state, int n_cells);

    int components() const noexcept { return static_cast<int>(values_.rows()); }
    int cells() const noexcept { return static_cast<int>(values_.cols()); }
    bool empty() const noexcept { return values_.size() == 0; }

    double& operator()(int component, int cell) { return values_(component, cell); }
    double operator()(int component, int cell) const { return values_(component, cell); }

    StateVector cell(int i) const { return values_.col(i); }
    void set_cell(int i, const StateVector& state) { values_.col(i) = state; }

    Eigen::MatrixXd& values() noexcept { return values_; }
    const Eigen::MatrixXd& values() const noexcept { return values_; }

    // Componentwise sum over cells (total mass per component up to dx).
    StateVector cell_sum() const;
    bool all_finite() const;
    double squared_norm() const { return values_.squaredNorm(); }

    friend bool operator==(const StateField& a, const StateField& b) {
        return a.values_.rows() == b.values_.rows() && a.values_.cols() == b.values_.cols() &&
               a.values_ == b.values_;
    }

private:
    Eigen::MatrixXd values_;
};

struct SpaceTimeTrajectory {
    SpaceTimeTrajectory(TemporalGrid grid, std::vector<StateField> states);

    TemporalGrid grid;
    std::vector<StateField> states;

    bool all_finite() const;
};

// ||u - ref||_2 / ||ref||_2 over every component, cell and temporal node.
double rel_l2_spacetime_error(const SpaceTimeTrajectory& u, const SpaceTimeTrajectory& ref);
double rel_l2_spacetime_error(const std::vector<StateField>& u, const std::vector<StateField>& ref);

// max over nodes, cells and waves of |lambda_k(u_i)| * dt / dx.
double max_cfl(const SpaceTimeTrajectory& traj, const ConservationModel& model, double dt, double dx);
double max_cfl(const StateField& field, const ConservationModel& model, double dt, double dx);

} // namespace mgritcl
