#include "mgritcl/stepper.hpp"

#include "mgritcl/errors.hpp"

#include <algorithm>
#include <cctype>

namespace mgritcl {

std::string to_string(StepperKind kind) {
    switch (kind) {
    case StepperKind::ForwardEuler: return "FE";
    case StepperKind::SSPRK2: return "SSPRK2";
    case StepperKind::SSPRK3: return "SSPRK3";
    case StepperKind::LaxFriedrichsFine: return "LF-FE";
    case StepperKind::MatchedLF0: return "matched0";
    case StepperKind::MatchedLF1: return "matched1";
    case StepperKind::Rediscretize: return "rediscretize";
    }
    return "unknown";
}

StepperKind parse_stepper_kind(const std::string& text) {
    std::string t;
    std::transform(text.begin(), text.end(), std::back_inserter(t),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "fe" || t == "ssprk1") return StepperKind::ForwardEuler;
    if (t == "ssprk2") return StepperKind::SSPRK2;
    if (t == "ssprk3") return StepperKind::SSPRK3;
    if (t == "lf-fe" || t == "lf-fine") return StepperKind::LaxFriedrichsFine;
    if (t == "matched0") return StepperKind::MatchedLF0;
    if (t == "matched1") return StepperKind::MatchedLF1;
    if (t == "rediscretize" || t == "rediscretise") return StepperKind::Rediscretize;
    throw ConfigError("unknown stepper '" + text + "'");
}

int StepperSpec::order() const noexcept {
    switch (kind) {
    case StepperKind::ForwardEuler: return 1;
    case StepperKind::SSPRK2: return 2;
    case StepperKind::SSPRK3: return 3;
    case StepperKind::LaxFriedrichsFine: return 1;
    case StepperKind::MatchedLF0: return 1;
    case StepperKind::MatchedLF1: return 1;
    case StepperKind::Rediscretize: return 0;
    }
    return 0;
}

StateField step_fe(const RhsOperator& op, const StateField& u, double dt) {
    StateField out = u;
    out.values() += dt * op(u).values();
    return out;
}

StateField step_ssprk2(const RhsOperator& op, const StateField& u, double dt) {
    StateField u1 = step_fe(op, u, dt);
    const StateField a1 = op(u1);
    u1.values() = 0.5 * u.values() + 0.5 * u1.values() + 0.5 * dt * a1.values();
    return u1;
}

StateField step_ssprk3(const RhsOperator& op, const StateField& u, double dt) {
    StateField stage = step_fe(op, u, dt);
    StateField a = op(stage);
    stage.values() = 0.75 * u.values() + 0.25 * stage.values() + 0.25 * dt * a.values();
    a = op(stage);
    stage.values() = (1.0 / 3.0) * u.values() + (2.0 / 3.0) * stage.values() + (2.0 / 3.0) * dt * a.values();
    return stage;
}

Eigen::RowVectorXd average_operator(const Eigen::RowVectorXd& v) {
    const Eigen::Index n = v.size();
    Eigen::RowVectorXd out(n);
    if (n == 1) {
        out = v;
        return out;
    }
    out(0) = 0.5 * (v(1) + v(n - 1));
    out(n - 1) = 0.5 * (v(0) + v(n - 2));
    if (n > 2) {
        out.segment(1, n - 2) = 0.5 * (v.segment(2, n - 2) + v.segment(0, n - 2));
    }
    return out;
}

Eigen::RowVectorXd central_difference(const Eigen::RowVectorXd& v, double dx) {
    const Eigen::Index n = v.size();
    Eigen::RowVectorXd out(n);
    if (n == 1) {
        out.setZero();
        return out;
    }
    const double s = 0.5 / dx;
    out(0) = s * (v(1) - v(n - 1));
    out(n - 1) = s * (v(0) - v(n - 2));
    if (n > 2) {
        out.segment(1, n - 2) = s * (v.segment(2, n - 2) - v.segment(0, n - 2));
    }
    return out;
}

namespace {

Eigen::RowVectorXd burgers_flux(const Eigen::RowVectorXd& u) { return 0.5 * u.array().square().matrix(); }

void require_scalar(const StateField& u) {
    if (u.components() != 1) {
        throw ConfigError("matched Lax-Friedrichs steppers are defined for Burgers only");
    }
}

} // namespace

StateField matched_lf_fine(const StateField& u, double dt, double dx) {
    require_scalar(u);
    const Eigen::RowVectorXd v = u.values().row(0);
    StateField out(1, u.cells());
    out.values().row(0) = average_operator(v) - dt * central_difference(burgers_flux(v), dx);
    return out;
}

StateField matched_lf_coarse(const StateField& u, double dt_fine, double dx, int m, int order) {
    require_scalar(u);
    if (m < 1) {
        throw ConfigError("matched coarse stepper needs m >= 1");
    }
    if (order != 0 && order != 1) {
        throw ConfigError("matched coarse stepper supports orders 0 and 1");
    }
    const Eigen::RowVectorXd v = u.values().row(0);
    StateField out(1, u.cells());

    if (order == 0) {
        Eigen::RowVectorXd em = v;
        for (int p = 0; p < m; ++p) {
            em = average_operator(em);
        }
        out.values().row(0) = em - (m * dt_fine) * central_difference(burgers_flux(v), dx);
        return out;
    }

    // powers[p] = E^p u for p = 0..m
    std::vector<Eigen::RowVectorXd> powers;
    powers.reserve(m + 1);
    powers.push_back(v);
    for (int p = 1; p <= m; ++p) {
        powers.push_back(average_operator(powers.back()));
    }
    // Horner: sum_{j=1..m} E^{j-1} g_j with g_j = D f(E^{m-j} u).
    Eigen::RowVectorXd acc = central_difference(burgers_flux(powers[0]), dx);  // g_m
    for (int j = m - 1; j >= 1; --j) {
        acc = average_operator(acc) + central_difference(burgers_flux(powers[m - j]), dx);
    }
    out.values().row(0) = powers[m] - dt_fine * acc;
    return out;
}

TimeStepper::TimeStepper(StepperSpec spec, std::optional<SemiDiscreteOperator> op, double dt, double dx)
    : spec_(spec), op_(std::move(op)), dt_(dt), dx_(dx) {
    if (!(dt > 0.0)) {
        throw ConfigError("time step must be positive");
    }
    if (spec_.kind == StepperKind::Rediscretize) {
        throw ConfigError("rediscretize must be resolved to a concrete scheme before building a stepper");
    }
    if (spec_.uses_operator() && !op_) {
        throw ConfigError(to_string(spec_.kind) + " needs a semi-discrete operator");
    }
    if (spec_.is_matched() && spec_.m_effective < 2) {
        throw ConfigError("matched coarse steppers need m >= 2");
    }
}

StateField TimeStepper::operator()(const StateField& u) const {
    switch (spec_.kind) {
    case StepperKind::ForwardEuler: return step_fe(*op_, u, dt_);
    case StepperKind::SSPRK2: return step_ssprk2(*op_, u, dt_);
    case StepperKind::SSPRK3: return step_ssprk3(*op_, u, dt_);
    case StepperKind::LaxFriedrichsFine: return matched_lf_fine(u, dt_, dx_);
    case StepperKind::MatchedLF0: return matched_lf_coarse(u, dt_, dx_, spec_.m_effective, 0);
    case StepperKind::MatchedLF1: return matched_lf_coarse(u, dt_, dx_, spec_.m_effective, 1);
    case StepperKind::Rediscretize: break;
    }
    throw ConfigError("unresolved stepper");
}

TimeStepper make_stepper(const StepperSpec& spec, const SemiDiscreteOperator& op, double dt) {
    const bool builtin_lf = spec.kind == StepperKind::LaxFriedrichsFine || spec.is_matched();
    if (builtin_lf && op.model().kind() != ModelKind::Burgers) {
        throw ConfigError(to_string(spec.kind) + " is only available for Burgers' equation");
    }
    return TimeStepper(spec, builtin_lf ? std::nullopt : std::optional<SemiDiscreteOperator>(op), dt,
                       op.grid().dx());
}

int integer_power(int base, int exponent) {
    int p = 1;
    for (int i = 0; i < exponent; ++i) {
        p *= base;
    }
    return p;
}

TimeStepper make_level_stepper(const StepperSpec& fine_spec, const StepperSpec& level_spec,
                               const SemiDiscreteOperator& op, double dt_fine, int level, int m) {
    const int scale = integer_power(m, level);
    if (level_spec.kind == StepperKind::Rediscretize) {
        if (fine_spec.kind == StepperKind::Rediscretize || fine_spec.is_matched()) {
            throw ConfigError("the finest level needs a concrete, non-matched scheme");
        }
        return make_stepper(fine_spec, op, dt_fine * scale);
    }
    if (level_spec.is_matched()) {
        StepperSpec spec = level_spec;
        spec.m_effective = scale;
        return make_stepper(spec, op, dt_fine);
    }
    return make_stepper(level_spec, op, dt_fine * scale);
}

} // namespace mgritcl
