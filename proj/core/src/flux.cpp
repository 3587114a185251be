#include "mgritcl/flux.hpp"

#include "mgritcl/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mgritcl {

std::string to_string(FluxKind kind) {
    return kind == FluxKind::LaxFriedrichs ? "lax-friedrichs" : "roe";
}

double lf_alpha(const ConservationModel& model, const InterfaceStates& states) {
    double alpha = 0.0;
    for (int i = 0; i < states.minus.cells(); ++i) {
        try {
            alpha = std::max({alpha, model.max_wave_speed(states.minus.cell(i)),
                              model.max_wave_speed(states.plus.cell(i))});
        } catch (const PhysicalStateError& e) {
            throw PhysicalStateError(e.what(), i);
        }
    }
    return alpha;
}

StateVector lf_flux(const ConservationModel& model, const StateVector& uL, const StateVector& uR, double alpha) {
    return 0.5 * (flux(model, uL) + flux(model, uR)) - 0.5 * alpha * (uR - uL);
}

double entropy_fix(double lambda_hat, double lambda_minus, double lambda_plus) {
    const double delta = std::max({0.0, lambda_hat - lambda_minus, lambda_plus - lambda_hat});
    if (std::abs(lambda_hat) < delta) {
        return 0.5 * (lambda_hat * lambda_hat / delta + delta);
    }
    return std::abs(lambda_hat);
}

StateVector roe_flux(const ConservationModel& model, const StateVector& uL, const StateVector& uR) {
    const EigenDecomposition roe = eigen(model, roe_average(model, uL, uR));
    const StateVector lambda_minus = model.eigenvalues(uL);
    const StateVector lambda_plus = model.eigenvalues(uR);
    const StateVector strengths = roe.left * (uR - uL);

    StateVector f = 0.5 * (flux(model, uL) + flux(model, uR));
    for (int k = 0; k < model.components(); ++k) {
        const double speed = entropy_fix(roe.eigenvalues(k), lambda_minus(k), lambda_plus(k));
        f -= 0.5 * speed * strengths(k) * roe.right.col(k);
    }
    return f;
}

SemiDiscreteOperator::SemiDiscreteOperator(ConservationModel model, SpatialGrid grid, FluxConfig config)
    : model_(model), grid_(grid), config_(config), tables_(build_tables(config.weno.k)) {
    if (!(config.weno.epsilon > 0.0)) {
        throw ConfigError("WENO epsilon must be positive");
    }
}

StateField SemiDiscreteOperator::interface_fluxes(const StateField& u) const {
    const int n = u.cells();
    const InterfaceStates states = reconstruct_all_interfaces(model_, tables_, config_.weno, u);
    StateField fluxes(u.components(), n);
    if (config_.kind == FluxKind::LaxFriedrichs) {
        const double alpha = lf_alpha(model_, states);
        for (int i = 0; i < n; ++i) {
            try {
                fluxes.set_cell(i, lf_flux(model_, states.minus.cell(i), states.plus.cell(i), alpha));
            } catch (const PhysicalStateError& e) {
                throw PhysicalStateError(e.what(), i);
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            try {
                fluxes.set_cell(i, roe_flux(model_, states.minus.cell(i), states.plus.cell(i)));
            } catch (const PhysicalStateError& e) {
                throw PhysicalStateError(e.what(), i);
            }
        }
    }
    return fluxes;
}

StateField SemiDiscreteOperator::operator()(const StateField& u) const {
    if (u.components() != model_.components() || u.cells() != grid_.cells()) {
        throw DimensionError("state field does not match the operator's model and grid");
    }
    const StateField f = interface_fluxes(u);
    const int n = u.cells();
    const double inv_dx = 1.0 / grid_.dx();
    StateField rhs(u.components(), n);
    rhs.values().col(0) = -(f.values().col(0) - f.values().col(n - 1)) * inv_dx;
    if (n > 1) {
        rhs.values().rightCols(n - 1) =
            -(f.values().rightCols(n - 1) - f.values().leftCols(n - 1)) * inv_dx;
    }
    return rhs;
}

StateField semi_discrete_rhs(const SemiDiscreteOperator& op, const StateField& u) { return op(u); }

} // namespace mgritcl
