#pragma once

#include "mgritcl/grid.hpp"
#include "mgritcl/models.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <utility>

namespace mgritcl {

struct Rational {
    std::int64_t num;
    std::int64_t den;

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }
};

inline constexpr int kMaxWenoDegree = 3;

// Coefficients for reconstructing the value left of interface i+1/2 from
// polynomials of degree k. Candidate r uses the k+1 cells i-r, ..., i-r+k, so
// r = 0 is the downwind-most stencil; this is the row order of the classic
// k = 2 tables (c row 0 = (2, 5, -1)/6).
class WenoTables {
public:
    int degree() const noexcept { return k_; }
    int stencil_width() const noexcept { return 2 * k_ + 1; }

    Rational c_exact(int r, int j) const;
    Rational d_exact(int r) const;
    Rational b_exact(int r, int a, int b) const;

    double c(int r, int j) const noexcept { return c_[r][j]; }
    double d(int r) const noexcept { return d_[r]; }
    double b(int r, int a, int b) const noexcept { return b_[r][a][b]; }

private:
    friend WenoTables build_tables(int k);

    int k_ = 0;
    std::array<std::array<std::int64_t, 4>, 4> c_num_{};
    std::int64_t c_den_ = 1;
    std::array<std::int64_t, 4> d_num_{};
    std::int64_t d_den_ = 1;
    std::array<std::array<std::array<std::int64_t, 4>, 4>, 4> b_num_{};
    std::int64_t b_den_ = 1;

    std::array<std::array<double, 4>, 4> c_{};
    std::array<double, 4> d_{};
    std::array<std::array<std::array<double, 4>, 4>, 4> b_{};
};

// Tables for 0 <= k <= 3 (orders s = 2k + 1 in {1, 3, 5, 7}).
WenoTables build_tables(int k);

struct WenoConfig {
    int k = 2;
    double epsilon = 1e-6;
    bool characteristic = true;
    // Use the optimal weights d_r directly (the smooth-data limit).
    bool linear_weights = false;

    int order() const noexcept { return 2 * k + 1; }
};

WenoConfig weno_config_for_order(int s);

// beta_r = q^T B_r q for the k+1 values of stencil r.
double smoothness(const WenoTables& tables, std::span<const double> q, int r);

// Nonlinear weights omega_r for a stencil of 2k+1 values centred on cell i.
std::array<double, 4> weno_weights(const WenoTables& tables, double epsilon, std::span<const double> q,
                                   bool linear_weights = false);

// q^-_{i+1/2} from q_{i-k}, ..., q_{i+k}.
double reconstruct_left(const WenoTables& tables, double epsilon, std::span<const double> q,
                        bool linear_weights = false);

// q^+_{i+1/2} from q_{i+1-k}, ..., q_{i+1+k}; the mirror image of reconstruct_left.
double reconstruct_right(const WenoTables& tables, double epsilon, std::span<const double> q,
                         bool linear_weights = false);

// (u^-, u^+) at interface i+1/2, componentwise or through the characteristic
// fields of the central cell of each stencil.
std::pair<StateVector, StateVector> reconstruct_interface_states(const ConservationModel& model,
                                                                 const WenoTables& tables,
                                                                 const WenoConfig& config,
                                                                 const StateField& u, int interface);

// Column i of each field holds u^-_{i+1/2} and u^+_{i+1/2} respectively.
struct InterfaceStates {
    StateField minus;
    StateField plus;
};

InterfaceStates reconstruct_all_interfaces(const ConservationModel& model, const WenoTables& tables,
                                           const WenoConfig& config, const StateField& u);

} // namespace mgritcl
