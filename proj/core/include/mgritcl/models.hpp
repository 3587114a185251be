#pragma once

#include "mgritcl/grid.hpp"

#include <string>

namespace mgritcl {

enum class ModelKind { Burgers, ShallowWater, Euler };

std::string to_string(ModelKind kind);

// One of the three 1D conservation laws u_t + f(u)_x = 0 used throughout:
//   Burgers        u = u,            f = u^2 / 2
//   shallow water  u = (h, hu),      f = (hu, hu^2 + g h^2 / 2)
//   Euler          u = (rho, rho u, E), f = (rho u, rho u^2 + p, (E + p) u),
//                  p = (gamma - 1)(E - rho u^2 / 2)
class ConservationModel {
public:
    static ConservationModel burgers();
    static ConservationModel shallow_water(double gravity = 9.81);
    static ConservationModel euler(double gamma = 5.0 / 3.0);

    ModelKind kind() const noexcept { return kind_; }
    int components() const noexcept;
    double gravity() const noexcept { return gravity_; }
    double gamma() const noexcept { return gamma_; }

    // Throws PhysicalStateError when h <= 0, rho <= 0 or p <= 0.
    void check_admissible(const StateVector& u) const;

    // Jacobian eigenvalues in the order lambda_0 < ... (u - c, [u,] u + c).
    StateVector eigenvalues(const StateVector& u) const;
    double max_wave_speed(const StateVector& u) const;

private:
    ConservationModel(ModelKind kind, double gravity, double gamma);

    ModelKind kind_;
    double gravity_;
    double gamma_;
};

StateVector flux(const ConservationModel& model, const StateVector& u);

struct EigenDecomposition {
    StateVector eigenvalues;
    SmallMatrix right;  // columns r_k
    SmallMatrix left;   // rows, left * right == I
};

EigenDecomposition eigen(const ConservationModel& model, const StateVector& u);

// Roe-averaged quantities. Only the fields relevant for the model are set:
// Burgers uses velocity; shallow water uses height and velocity; Euler uses
// velocity and enthalpy.
struct RoeAverage {
    double velocity = 0.0;
    double height = 0.0;
    double enthalpy = 0.0;
};

RoeAverage roe_average(const ConservationModel& model, const StateVector& uL, const StateVector& uR);

// Eigenstructure of the Jacobian linearised about a Roe average.
EigenDecomposition eigen(const ConservationModel& model, const RoeAverage& avg);

inline StateVector to_characteristic(const EigenDecomposition& dec, const StateVector& u) {
    return dec.left * u;
}

inline StateVector from_characteristic(const EigenDecomposition& dec, const StateVector& w) {
    return dec.right * w;
}

} // namespace mgritcl
