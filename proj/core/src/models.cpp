#include "mgritcl/models.hpp"

#include "mgritcl/errors.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>

namespace mgritcl {

namespace {

struct EulerPrimitives {
    double velocity;
    double pressure;
    double enthalpy;
};

EulerPrimitives euler_primitives(double gamma, const StateVector& u) {
    const double rho = u(0);
    if (!(rho > 0.0)) {
        throw PhysicalStateError("non-positive density");
    }
    const double vel = u(1) / rho;
    const double p = (gamma - 1.0) * (u(2) - 0.5 * rho * vel * vel);
    if (!(p > 0.0)) {
        throw PhysicalStateError("non-positive pressure");
    }
    return {vel, p, (u(2) + p) / rho};
}

double checked_sqrt(double radicand, const char* what) {
    if (!(radicand > 0.0)) {
        throw PhysicalStateError(what);
    }
    return std::sqrt(radicand);
}

EigenDecomposition shallow_water_eigen(double vel, double c) {
    EigenDecomposition dec;
    dec.eigenvalues.resize(2);
    dec.eigenvalues << vel - c, vel + c;
    dec.right.resize(2, 2);
    dec.right << 1.0, 1.0, vel - c, vel + c;
    // Inverse of [[1, 1], [l0, l1]] is [[l1, -1], [-l0, 1]] / (l1 - l0).
    const double inv = 1.0 / (2.0 * c);
    dec.left.resize(2, 2);
    dec.left << (vel + c) * inv, -inv, -(vel - c) * inv, inv;
    return dec;
}

EigenDecomposition euler_eigen(double vel, double enthalpy, double c) {
    EigenDecomposition dec;
    dec.eigenvalues.resize(3);
    dec.eigenvalues << vel - c, vel, vel + c;
    Eigen::Matrix3d r;
    r << 1.0, 1.0, 1.0,
         vel - c, vel, vel + c,
         enthalpy - vel * c, 0.5 * vel * vel, enthalpy + vel * c;
    dec.right = r;
    dec.left = r.inverse();
    return dec;
}

EigenDecomposition scalar_eigen(double speed) {
    EigenDecomposition dec;
    dec.eigenvalues = StateVector::Constant(1, speed);
    dec.right = SmallMatrix::Identity(1, 1);
    dec.left = SmallMatrix::Identity(1, 1);
    return dec;
}

} // namespace

std::string to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::Burgers: return "burgers";
    case ModelKind::ShallowWater: return "shallow-water";
    case ModelKind::Euler: return "euler";
    }
    return "unknown";
}

ConservationModel::ConservationModel(ModelKind kind, double gravity, double gamma)
    : kind_(kind), gravity_(gravity), gamma_(gamma) {}

ConservationModel ConservationModel::burgers() { return {ModelKind::Burgers, 0.0, 0.0}; }

ConservationModel ConservationModel::shallow_water(double gravity) {
    if (!(gravity > 0.0)) {
        throw ConfigError("gravity must be positive");
    }
    return {ModelKind::ShallowWater, gravity, 0.0};
}

ConservationModel ConservationModel::euler(double gamma) {
    if (!(gamma > 1.0)) {
        throw ConfigError("gamma must exceed 1");
    }
    return {ModelKind::Euler, 0.0, gamma};
}

int ConservationModel::components() const noexcept {
    switch (kind_) {
    case ModelKind::Burgers: return 1;
    case ModelKind::ShallowWater: return 2;
    case ModelKind::Euler: return 3;
    }
    return 0;
}

void ConservationModel::check_admissible(const StateVector& u) const {
    if (u.size() != components()) {
        throw DimensionError("state has " + std::to_string(u.size()) + " components, model " +
                             to_string(kind_) + " expects " + std::to_string(components()));
    }
    switch (kind_) {
    case ModelKind::Burgers:
        break;
    case ModelKind::ShallowWater:
        if (!(u(0) > 0.0)) {
            throw PhysicalStateError("non-positive water height");
        }
        break;
    case ModelKind::Euler:
        euler_primitives(gamma_, u);
        break;
    }
}

StateVector ConservationModel::eigenvalues(const StateVector& u) const {
    StateVector lambda(components());
    switch (kind_) {
    case ModelKind::Burgers:
        lambda(0) = u(0);
        break;
    case ModelKind::ShallowWater: {
        check_admissible(u);
        const double vel = u(1) / u(0);
        const double c = std::sqrt(gravity_ * u(0));
        lambda << vel - c, vel + c;
        break;
    }
    case ModelKind::Euler: {
        const auto prim = euler_primitives(gamma_, u);
        const double c = checked_sqrt((gamma_ - 1.0) * (prim.enthalpy - 0.5 * prim.velocity * prim.velocity),
                                      "non-positive squared sound speed");
        lambda << prim.velocity - c, prim.velocity, prim.velocity + c;
        break;
    }
    }
    return lambda;
}

double ConservationModel::max_wave_speed(const StateVector& u) const {
    return eigenvalues(u).cwiseAbs().maxCoeff();
}

StateVector flux(const ConservationModel& model, const StateVector& u) {
    StateVector f(model.components());
    switch (model.kind()) {
    case ModelKind::Burgers:
        f(0) = 0.5 * u(0) * u(0);
        break;
    case ModelKind::ShallowWater: {
        model.check_admissible(u);
        const double vel = u(1) / u(0);
        f << u(1), u(1) * vel + 0.5 * model.gravity() * u(0) * u(0);
        break;
    }
    case ModelKind::Euler: {
        const auto prim = euler_primitives(model.gamma(), u);
        f << u(1), u(1) * prim.velocity + prim.pressure, (u(2) + prim.pressure) * prim.velocity;
        break;
    }
    }
    return f;
}

EigenDecomposition eigen(const ConservationModel& model, const StateVector& u) {
    switch (model.kind()) {
    case ModelKind::Burgers:
        return scalar_eigen(u(0));
    case ModelKind::ShallowWater:
        model.check_admissible(u);
        return shallow_water_eigen(u(1) / u(0), std::sqrt(model.gravity() * u(0)));
    case ModelKind::Euler: {
        const auto prim = euler_primitives(model.gamma(), u);
        const double c = checked_sqrt(
            (model.gamma() - 1.0) * (prim.enthalpy - 0.5 * prim.velocity * prim.velocity),
            "non-positive squared sound speed");
        return euler_eigen(prim.velocity, prim.enthalpy, c);
    }
    }
    throw ConfigError("unknown model");
}

RoeAverage roe_average(const ConservationModel& model, const StateVector& uL, const StateVector& uR) {
    RoeAverage avg;
    switch (model.kind()) {
    case ModelKind::Burgers:
        avg.velocity = 0.5 * (uL(0) + uR(0));
        break;
    case ModelKind::ShallowWater: {
        model.check_admissible(uL);
        model.check_admissible(uR);
        const double sl = std::sqrt(uL(0));
        const double sr = std::sqrt(uR(0));
        avg.height = 0.5 * (uL(0) + uR(0));
        avg.velocity = (uL(1) / sl + uR(1) / sr) / (sl + sr);
        break;
    }
    case ModelKind::Euler: {
        const auto pl = euler_primitives(model.gamma(), uL);
        const auto pr = euler_primitives(model.gamma(), uR);
        const double sl = std::sqrt(uL(0));
        const double sr = std::sqrt(uR(0));
        avg.velocity = (pl.velocity * sl + pr.velocity * sr) / (sl + sr);
        avg.enthalpy = (pl.enthalpy * sl + pr.enthalpy * sr) / (sl + sr);
        break;
    }
    }
    return avg;
}

EigenDecomposition eigen(const ConservationModel& model, const RoeAverage& avg) {
    switch (model.kind()) {
    case ModelKind::Burgers:
        return scalar_eigen(avg.velocity);
    case ModelKind::ShallowWater:
        return shallow_water_eigen(avg.velocity,
                                   checked_sqrt(model.gravity() * avg.height, "non-positive Roe height"));
    case ModelKind::Euler: {
        const double c = checked_sqrt(
            (model.gamma() - 1.0) * (avg.enthalpy - 0.5 * avg.velocity * avg.velocity),
            "negative radicand in Roe sound speed");
        return euler_eigen(avg.velocity, avg.enthalpy, c);
    }
    }
    throw ConfigError("unknown model");
}

} // namespace mgritcl
