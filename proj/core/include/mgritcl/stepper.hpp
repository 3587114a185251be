#pragma once

#include "mgritcl/flux.hpp"
#include "mgritcl/grid.hpp"

#include <functional>
#include <optional>
#include <string>

namespace mgritcl {

// Any semi-discrete right-hand side u -> A(u).
using RhsOperator = std::function<StateField(const StateField&)>;

enum class StepperKind {
    ForwardEuler,
    SSPRK2,
    SSPRK3,
    // Burgers Lax-Friedrichs/forward-Euler kernel E u - dt D f(u).
    LaxFriedrichsFine,
    // Coarse steppers matching m_effective applications of LaxFriedrichsFine.
    MatchedLF0,
    MatchedLF1,
    // Placeholder resolved per level: the finest scheme with dt * m^l.
    Rediscretize,
};

std::string to_string(StepperKind kind);
StepperKind parse_stepper_kind(const std::string& text);

struct StepperSpec {
    StepperKind kind = StepperKind::SSPRK3;
    int m_effective = 1;

    // Temporal order d of the underlying scheme (0 for Rediscretize).
    int order() const noexcept;
    bool is_matched() const noexcept {
        return kind == StepperKind::MatchedLF0 || kind == StepperKind::MatchedLF1;
    }
    // Steppers that need a SemiDiscreteOperator rather than the built-in LF kernel.
    bool uses_operator() const noexcept {
        return kind == StepperKind::ForwardEuler || kind == StepperKind::SSPRK2 || kind == StepperKind::SSPRK3;
    }
};

StateField step_fe(const RhsOperator& op, const StateField& u, double dt);
StateField step_ssprk2(const RhsOperator& op, const StateField& u, double dt);
StateField step_ssprk3(const RhsOperator& op, const StateField& u, double dt);

// Periodic average E(v)_i = (v_{i+1} + v_{i-1}) / 2 and central difference
// D(v)_i = (v_{i+1} - v_{i-1}) / (2 dx) on a single row.
Eigen::RowVectorXd average_operator(const Eigen::RowVectorXd& v);
Eigen::RowVectorXd central_difference(const Eigen::RowVectorXd& v, double dx);

// E u - dt D f(u) for Burgers.
StateField matched_lf_fine(const StateField& u, double dt, double dx);

// order 0: E^m u - m dt D f(u)
// order 1: E^m u - dt sum_{j=1..m} E^{j-1} D f(E^{m-j} u)
StateField matched_lf_coarse(const StateField& u, double dt_fine, double dx, int m, int order);

// Single-step propagator with a fixed step. For matched steppers dt is the
// fine step and one application advances m_effective * dt.
class TimeStepper {
public:
    TimeStepper(StepperSpec spec, std::optional<SemiDiscreteOperator> op, double dt, double dx);

    StateField operator()(const StateField& u) const;

    const StepperSpec& spec() const noexcept { return spec_; }
    double dt() const noexcept { return dt_; }
    // Physical time covered by one application.
    double advance() const noexcept { return spec_.is_matched() ? dt_ * spec_.m_effective : dt_; }

private:
    StepperSpec spec_;
    std::optional<SemiDiscreteOperator> op_;
    double dt_;
    double dx_;
};

TimeStepper make_stepper(const StepperSpec& spec, const SemiDiscreteOperator& op, double dt);

// Stepper for level l of a hierarchy with coarsening factor m: Rediscretize
// reuses fine_spec with dt_fine * m^l, matched steppers emulate m^l fine
// steps, everything else runs with dt_fine * m^l.
TimeStepper make_level_stepper(const StepperSpec& fine_spec, const StepperSpec& level_spec,
                               const SemiDiscreteOperator& op, double dt_fine, int level, int m);

int integer_power(int base, int exponent);

} // namespace mgritcl
