#include "mgritcl/mgrit.hpp"

#include "mgritcl/errors.hpp"
#include "mgritcl/parallel.hpp"

#include <cmath>

namespace mgritcl {

namespace {

void add_rhs(StateField& x, const StateField& g) {
    if (!g.empty()) {
        x.values() += g.values();
    }
}

} // namespace

std::string to_string(CycleType c) { return c == CycleType::V ? "V" : "F"; }
std::string to_string(RelaxationType r) { return r == RelaxationType::F ? "F" : "FCF"; }
std::string to_string(RestrictionGuess g) { return g == RestrictionGuess::Injection ? "injection" : "laststep"; }

Propagator compose(Propagator phi, int times) {
    if (times < 1) {
        throw ConfigError("composition needs at least one factor");
    }
    return [phi = std::move(phi), times](const StateField& u) {
        StateField v = phi(u);
        for (int i = 1; i < times; ++i) {
            v = phi(v);
        }
        return v;
    };
}

void validate_options(const MgritOptions& options, int fine_intervals) {
    if (options.n_levels < 1) {
        throw ConfigError("n_levels must be at least 1");
    }
    if (options.coarsening < 2) {
        throw ConfigError("coarsening factor m must be at least 2");
    }
    if (options.max_iters < 0) {
        throw ConfigError("max_iters must be non-negative");
    }
    if (options.parallelism < 1) {
        throw ConfigError("parallelism must be at least 1");
    }
    long long divisor = 1;
    for (int l = 1; l < options.n_levels; ++l) {
        divisor *= options.coarsening;
    }
    if (fine_intervals <= 0 || fine_intervals % divisor != 0) {
        throw ConfigError("N_t = " + std::to_string(fine_intervals) + " is not divisible by m^(n_levels-1) = " +
                          std::to_string(divisor));
    }
}

MgritHierarchy::MgritHierarchy(MgritOptions options, std::vector<Propagator> propagators,
                               StateField initial_condition, int fine_intervals)
    : options_(options) {
    validate_options(options_, fine_intervals);
    if (static_cast<int>(propagators.size()) != options_.n_levels) {
        throw ConfigError("expected one propagator per level");
    }
    int intervals = fine_intervals;
    for (int l = 0; l < options_.n_levels; ++l) {
        MgritLevel lvl;
        lvl.index = l;
        lvl.intervals = intervals;
        lvl.phi = std::move(propagators[l]);
        lvl.u.assign(intervals + 1, initial_condition);
        lvl.g.assign(intervals + 1, StateField());
        lvl.g[0] = initial_condition;
        levels_.push_back(std::move(lvl));
        intervals /= options_.coarsening;
    }
}

void MgritHierarchy::set_fine_iterate(std::vector<StateField> states) {
    auto& fine = levels_.front();
    if (states.size() != fine.u.size()) {
        throw DimensionError("iterate has " + std::to_string(states.size()) + " nodes, expected " +
                             std::to_string(fine.u.size()));
    }
    fine.u = std::move(states);
}

void MgritHierarchy::step_node(MgritLevel& lvl, int node) const {
    StateField next = lvl.phi(lvl.u[node - 1]);
    add_rhs(next, lvl.g[node]);
    lvl.u[node] = std::move(next);
}

void MgritHierarchy::f_relax(int l) {
    auto& lvl = levels_.at(l);
    const int m = options_.coarsening;
    parallel_for(lvl.intervals / m, options_.parallelism, [&](int chunk) {
        for (int j = 1; j < m; ++j) {
            step_node(lvl, chunk * m + j);
        }
    });
}

void MgritHierarchy::c_relax(int l) {
    auto& lvl = levels_.at(l);
    const int m = options_.coarsening;
    parallel_for(lvl.intervals / m, options_.parallelism, [&](int chunk) { step_node(lvl, (chunk + 1) * m); });
}

void MgritHierarchy::fcf_relax(int l) {
    f_relax(l);
    c_relax(l);
    f_relax(l);
}

void MgritHierarchy::relax(int l) {
    if (options_.relaxation == RelaxationType::FCF) {
        fcf_relax(l);
    } else {
        f_relax(l);
    }
}

void MgritHierarchy::restrict_fas(int l) {
    auto& fine = levels_.at(l);
    auto& coarse = levels_.at(l + 1);
    const int m = options_.coarsening;
    coarse.u[0] = fine.u[0];
    coarse.g[0] = fine.g[0];
    parallel_for(coarse.intervals, options_.parallelism, [&](int idx) {
        const int i = idx + 1;
        StateField last_step = fine.phi(fine.u[m * i - 1]);
        add_rhs(last_step, fine.g[m * i]);
        StateField rhs = last_step;
        rhs.values() -= coarse.phi(fine.u[m * (i - 1)]).values();
        coarse.g[i] = std::move(rhs);
        coarse.u[i] = options_.guess == RestrictionGuess::LastStep ? std::move(last_step) : fine.u[m * i];
    });
}

void MgritHierarchy::coarse_solve() {
    auto& lvl = levels_.back();
    for (int i = 1; i <= lvl.intervals; ++i) {
        step_node(lvl, i);
    }
}

void MgritHierarchy::interpolate(int l) {
    auto& fine = levels_.at(l);
    const auto& coarse = levels_.at(l + 1);
    const int m = options_.coarsening;
    for (int i = 1; i <= coarse.intervals; ++i) {
        fine.u[m * i] = coarse.u[i];
    }
    f_relax(l);
}

void MgritHierarchy::v_cycle(int l) {
    if (l == levels() - 1) {
        coarse_solve();
        return;
    }
    relax(l);
    restrict_fas(l);
    v_cycle(l + 1);
    interpolate(l);
}

void MgritHierarchy::f_cycle(int l) {
    if (l == levels() - 1) {
        coarse_solve();
        return;
    }
    relax(l);
    restrict_fas(l);
    f_cycle(l + 1);
    interpolate(l);
    if (l > 0) {
        v_cycle(l);
    }
}

void MgritHierarchy::cycle() {
    if (options_.cycle == CycleType::F) {
        f_cycle(0);
    } else {
        v_cycle(0);
    }
}

double MgritHierarchy::residual_norm() const {
    const auto& fine = levels_.front();
    std::vector<double> local(fine.intervals, 0.0);
    parallel_for(fine.intervals, options_.parallelism, [&](int idx) {
        const int i = idx + 1;
        StateField r = fine.phi(fine.u[i - 1]);
        add_rhs(r, fine.g[i]);
        local[idx] = (r.values() - fine.u[i].values()).squaredNorm();
    });
    double total = 0.0;
    for (double v : local) {
        total += v;
    }
    return std::sqrt(total);
}

MgritRun mgrit_solve(const MgritOptions& options, std::vector<Propagator> propagators,
                     const StateField& initial_condition, int fine_intervals,
                     const std::vector<StateField>& reference,
                     std::optional<std::vector<StateField>> initial_iterate) {
    MgritHierarchy hierarchy(options, std::move(propagators), initial_condition, fine_intervals);
    if (initial_iterate) {
        hierarchy.set_fine_iterate(std::move(*initial_iterate));
    }

    MgritRun run;
    run.record.initial_error = rel_l2_spacetime_error(hierarchy.fine_iterate(), reference);

    for (int it = 0; it < options.max_iters; ++it) {
        IterationRecord rec;
        try {
            hierarchy.cycle();
            const auto& u = hierarchy.fine_iterate();
            bool finite = true;
            for (const auto& s : u) {
                finite = finite && s.all_finite();
            }
            if (finite) {
                rec.error = rel_l2_spacetime_error(u, reference);
                rec.residual = hierarchy.residual_norm();
            }
            rec.diverged = !finite || !std::isfinite(rec.error) || rec.error > options.divergence_threshold ||
                           !std::isfinite(rec.residual);
        } catch (const PhysicalStateError&) {
            rec.diverged = true;
        } catch (const DivergenceError&) {
            rec.diverged = true;
        }
        if (rec.diverged) {
            rec.error = std::numeric_limits<double>::quiet_NaN();
            rec.residual = std::numeric_limits<double>::quiet_NaN();
        }
        run.record.iterations.push_back(rec);
        if (rec.diverged) {
            break;
        }
    }
    run.trajectory = hierarchy.fine_iterate();
    return run;
}

} // namespace mgritcl
