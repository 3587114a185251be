#include "mgritcl/weno.hpp"

#include "mgritcl/errors.hpp"

#include <algorithm>
#include <string>

namespace mgritcl {

namespace {

using Row = std::array<std::int64_t, 4>;
using Square = std::array<Row, 4>;

struct RawTables {
    Square c;
    std::int64_t c_den;
    Row d;
    std::int64_t d_den;
    std::array<Square, 4> b;
    std::int64_t b_den;
};

// Numerators over a common denominator per table; validated against the
// symbolic construction in tests/oracles.
const std::array<RawTables, 4>& raw_tables() {
    static const std::array<RawTables, 4> tables = {{
        {{{{1}}}, 1, {1}, 1, {{{{0}}}}, 1},
        {{{{1, 1}, {-1, 3}}}, 2,
         {2, 1}, 3,
         {{{{{1, -1}, {-1, 1}}}, {{{1, -1}, {-1, 1}}}}}, 1},
        {{{{2, 5, -1}, {-1, 5, 2}, {2, -7, 11}}}, 6,
         {3, 6, 1}, 10,
         {{{{{20, -31, 11}, {-31, 50, -19}, {11, -19, 8}}},
           {{{8, -13, 5}, {-13, 26, -13}, {5, -13, 8}}},
           {{{8, -19, 11}, {-19, 50, -31}, {11, -31, 20}}}}},
         6},
        {{{{3, 13, -5, 1}, {-1, 7, 7, -1}, {1, -5, 13, 3}, {-3, 13, -23, 25}}}, 12,
         {4, 18, 12, 1}, 35,
         {{{{{2107, -4701, 3521, -927}, {-4701, 11003, -8623, 2321},
             {3521, -8623, 7043, -1941}, {-927, 2321, -1941, 547}}},
           {{{547, -1261, 961, -247}, {-1261, 3443, -2983, 801},
             {961, -2983, 2843, -821}, {-247, 801, -821, 267}}},
           {{{267, -821, 801, -247}, {-821, 2843, -2983, 961},
             {801, -2983, 3443, -1261}, {-247, 961, -1261, 547}}},
           {{{547, -1941, 2321, -927}, {-1941, 7043, -8623, 3521},
             {2321, -8623, 11003, -4701}, {-927, 3521, -4701, 2107}}}}},
         240},
    }};
    return tables;
}

double candidate_value(const WenoTables& t, std::span<const double> q, int r) {
    const int k = t.degree();
    double v = 0.0;
    for (int j = 0; j <= k; ++j) {
        v += t.c(r, j) * q[k - r + j];
    }
    return v;
}

double stencil_smoothness(const WenoTables& t, std::span<const double> q, int r) {
    const int k = t.degree();
    double beta = 0.0;
    for (int a = 0; a <= k; ++a) {
        double row = 0.0;
        for (int b = 0; b <= k; ++b) {
            row += t.b(r, a, b) * q[k - r + b];
        }
        beta += q[k - r + a] * row;
    }
    return beta;
}

} // namespace

Rational WenoTables::c_exact(int r, int j) const { return {c_num_[r][j], c_den_}; }
Rational WenoTables::d_exact(int r) const { return {d_num_[r], d_den_}; }
Rational WenoTables::b_exact(int r, int a, int b) const { return {b_num_[r][a][b], b_den_}; }

WenoTables build_tables(int k) {
    if (k < 0 || k > kMaxWenoDegree) {
        throw ConfigError("unsupported WENO degree k = " + std::to_string(k) + " (expected 0..3)");
    }
    const RawTables& raw = raw_tables()[k];
    WenoTables t;
    t.k_ = k;
    t.c_num_ = raw.c;
    t.c_den_ = raw.c_den;
    t.d_num_ = raw.d;
    t.d_den_ = raw.d_den;
    t.b_num_ = raw.b;
    t.b_den_ = raw.b_den;
    for (int r = 0; r <= k; ++r) {
        t.d_[r] = static_cast<double>(raw.d[r]) / static_cast<double>(raw.d_den);
        for (int j = 0; j <= k; ++j) {
            t.c_[r][j] = static_cast<double>(raw.c[r][j]) / static_cast<double>(raw.c_den);
            for (int i = 0; i <= k; ++i) {
                t.b_[r][j][i] = static_cast<double>(raw.b[r][j][i]) / static_cast<double>(raw.b_den);
            }
        }
    }
    return t;
}

WenoConfig weno_config_for_order(int s) {
    if (s < 1 || s > 7 || s % 2 == 0) {
        throw ConfigError("WENO order must be one of 1, 3, 5, 7 (got " + std::to_string(s) + ")");
    }
    WenoConfig cfg;
    cfg.k = (s - 1) / 2;
    return cfg;
}

double smoothness(const WenoTables& tables, std::span<const double> q, int r) {
    const int k = tables.degree();
    double beta = 0.0;
    for (int a = 0; a <= k; ++a) {
        for (int b = 0; b <= k; ++b) {
            beta += q[a] * tables.b(r, a, b) * q[b];
        }
    }
    return beta;
}

std::array<double, 4> weno_weights(const WenoTables& tables, double epsilon, std::span<const double> q,
                                   bool linear_weights) {
    const int k = tables.degree();
    std::array<double, 4> w{};
    if (linear_weights || k == 0) {
        for (int r = 0; r <= k; ++r) {
            w[r] = tables.d(r);
        }
        return w;
    }
    double total = 0.0;
    for (int r = 0; r <= k; ++r) {
        const double denom = epsilon + stencil_smoothness(tables, q, r);
        w[r] = tables.d(r) / (denom * denom);
        total += w[r];
    }
    for (int r = 0; r <= k; ++r) {
        w[r] /= total;
    }
    return w;
}

double reconstruct_left(const WenoTables& tables, double epsilon, std::span<const double> q,
                        bool linear_weights) {
    const int k = tables.degree();
    if (k == 0) {
        return q[0];
    }
    const auto w = weno_weights(tables, epsilon, q, linear_weights);
    double v = 0.0;
    for (int r = 0; r <= k; ++r) {
        v += w[r] * candidate_value(tables, q, r);
    }
    return v;
}

double reconstruct_right(const WenoTables& tables, double epsilon, std::span<const double> q,
                         bool linear_weights) {
    std::array<double, 2 * kMaxWenoDegree + 1> reversed{};
    const int n = tables.stencil_width();
    for (int j = 0; j < n; ++j) {
        reversed[j] = q[n - 1 - j];
    }
    return reconstruct_left(tables, epsilon, std::span<const double>(reversed.data(), n), linear_weights);
}

namespace {

// Reconstructs u^-_{i+1/2} and u^+_{i-1/2} from the stencil centred on cell i.
std::pair<StateVector, StateVector> reconstruct_cell(const ConservationModel& model, const WenoTables& tables,
                                                     const WenoConfig& config, const StateField& u, int i) {
    const int k = tables.degree();
    const int n = u.cells();
    const int dim = u.components();
    const int width = 2 * k + 1;
    const bool characteristic = config.characteristic && dim > 1 && k > 0;

    EigenDecomposition dec;
    if (characteristic) {
        try {
            dec = eigen(model, u.cell(i));
        } catch (const PhysicalStateError& e) {
            throw PhysicalStateError(e.what(), i);
        }
    }

    std::array<std::array<double, 2 * kMaxWenoDegree + 1>, 3> fields{};
    for (int j = 0; j < width; ++j) {
        const StateVector s = u.cell(wrap_index(i - k + j, n));
        const StateVector w = characteristic ? to_characteristic(dec, s) : s;
        for (int c = 0; c < dim; ++c) {
            fields[c][j] = w(c);
        }
    }

    StateVector minus(dim);
    StateVector plus(dim);
    for (int c = 0; c < dim; ++c) {
        const std::span<const double> q(fields[c].data(), width);
        minus(c) = reconstruct_left(tables, config.epsilon, q, config.linear_weights);
        plus(c) = reconstruct_right(tables, config.epsilon, q, config.linear_weights);
    }
    if (characteristic) {
        return {from_characteristic(dec, minus), from_characteristic(dec, plus)};
    }
    return {minus, plus};
}

} // namespace

std::pair<StateVector, StateVector> reconstruct_interface_states(const ConservationModel& model,
                                                                 const WenoTables& tables,
                                                                 const WenoConfig& config,
                                                                 const StateField& u, int interface) {
    const int n = u.cells();
    const int left_cell = wrap_index(interface, n);
    const int right_cell = wrap_index(interface + 1, n);
    return {reconstruct_cell(model, tables, config, u, left_cell).first,
            reconstruct_cell(model, tables, config, u, right_cell).second};
}

InterfaceStates reconstruct_all_interfaces(const ConservationModel& model, const WenoTables& tables,
                                           const WenoConfig& config, const StateField& u) {
    const int n = u.cells();
    InterfaceStates out{StateField(u.components(), n), StateField(u.components(), n)};
    for (int i = 0; i < n; ++i) {
        auto [minus, plus] = reconstruct_cell(model, tables, config, u, i);
        out.minus.set_cell(i, minus);
        out.plus.set_cell(wrap_index(i - 1, n), plus);
    }
    return out;
}

} // namespace mgritcl
