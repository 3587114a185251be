#pragma once

#include "mgritcl/grid.hpp"
#include "mgritcl/models.hpp"
#include "mgritcl/weno.hpp"

#include <string>

namespace mgritcl {

enum class FluxKind { LaxFriedrichs, Roe };

std::string to_string(FluxKind kind);

struct FluxConfig {
    FluxKind kind = FluxKind::LaxFriedrichs;
    WenoConfig weno;
};

// Largest |lambda_k| over both reconstructed states of every interface.
double lf_alpha(const ConservationModel& model, const InterfaceStates& states);

// 1/2 (f(uL) + f(uR)) - 1/2 alpha (uR - uL).
StateVector lf_flux(const ConservationModel& model, const StateVector& uL, const StateVector& uR, double alpha);

// Harten-Hyman smoothing of a Roe wave speed.
double entropy_fix(double lambda_hat, double lambda_minus, double lambda_plus);

// 1/2 (f(uL) + f(uR)) - 1/2 sum_k q_H(lambda_hat_k) alpha_k r_hat_k, with
// alpha = L_hat (uR - uL) the expansion of the jump in the Roe eigenbasis.
StateVector roe_flux(const ConservationModel& model, const StateVector& uL, const StateVector& uR);

// A(u)_i = -(f_{i+1/2} - f_{i-1/2}) / dx on a periodic grid.
class SemiDiscreteOperator {
public:
    SemiDiscreteOperator(ConservationModel model, SpatialGrid grid, FluxConfig config);

    const ConservationModel& model() const noexcept { return model_; }
    const SpatialGrid& grid() const noexcept { return grid_; }
    const FluxConfig& config() const noexcept { return config_; }
    const WenoTables& tables() const noexcept { return tables_; }

    StateField operator()(const StateField& u) const;

    // Numerical flux at every interface; column i is f_{i+1/2}.
    StateField interface_fluxes(const StateField& u) const;

private:
    ConservationModel model_;
    SpatialGrid grid_;
    FluxConfig config_;
    WenoTables tables_;
};

StateField semi_discrete_rhs(const SemiDiscreteOperator& op, const StateField& u);

} // namespace mgritcl
