#pragma once

#include "mgritcl/grid.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace mgritcl {

// Time propagator Phi: u^n -> u^{n+1} on one level. Must be safe to call
// concurrently.
using Propagator = std::function<StateField(const StateField&)>;

enum class CycleType { V, F };
enum class RelaxationType { F, FCF };
enum class RestrictionGuess { Injection, LastStep };

std::string to_string(CycleType c);
std::string to_string(RelaxationType r);
std::string to_string(RestrictionGuess g);

struct MgritOptions {
    int n_levels = 2;
    int coarsening = 2;
    CycleType cycle = CycleType::V;
    RelaxationType relaxation = RelaxationType::F;
    RestrictionGuess guess = RestrictionGuess::LastStep;
    int max_iters = 10;
    double divergence_threshold = 1e10;
    int parallelism = 1;
};

// Propagator composed with itself `times` times.
Propagator compose(Propagator phi, int times);

struct MgritLevel {
    int index = 0;
    int intervals = 0;
    Propagator phi;
    std::vector<StateField> u;
    // FAS right-hand side; an empty field stands for zero.
    std::vector<StateField> g;
};

// The space-time system u^0 = g^0, u^i - Phi(u^{i-1}) = g^i on every level,
// with coarse nodes every m-th node and FAS coarse right-hand sides.
class MgritHierarchy {
public:
    MgritHierarchy(MgritOptions options, std::vector<Propagator> propagators, StateField initial_condition,
                   int fine_intervals);

    const MgritOptions& options() const noexcept { return options_; }
    int levels() const noexcept { return static_cast<int>(levels_.size()); }
    MgritLevel& level(int l) { return levels_.at(l); }
    const MgritLevel& level(int l) const { return levels_.at(l); }

    const std::vector<StateField>& fine_iterate() const noexcept { return levels_.front().u; }
    void set_fine_iterate(std::vector<StateField> states);

    // Fine nodes of every chunk: u^{cm+j} = Phi(u^{cm+j-1}) + g^{cm+j}, j = 1..m-1.
    void f_relax(int l);
    // Coarse nodes c > 0: u^{cm} = Phi(u^{cm-1}) + g^{cm}.
    void c_relax(int l);
    void fcf_relax(int l);
    // Relaxation named in the options.
    void relax(int l);

    // FAS restriction from level l to l+1, including the coarse initial guess.
    void restrict_fas(int l);
    // Sequential forward substitution on the coarsest level.
    void coarse_solve();
    // Injection of level l+1 onto the coarse nodes of level l, then F-relaxation.
    void interpolate(int l);

    void v_cycle(int l = 0);
    // Descend relaxing and restricting, solve the coarsest level, then on the
    // way up interpolate and run a V-cycle rooted at every intermediate level.
    void f_cycle(int l = 0);
    // One iteration of the configured cycle.
    void cycle();

    // sqrt(sum_{i>=1} ||g^i + Phi_0(u^{i-1}) - u^i||^2) on the finest level.
    double residual_norm() const;

private:
    void step_node(MgritLevel& lvl, int node) const;

    MgritOptions options_;
    std::vector<MgritLevel> levels_;
};

struct IterationRecord {
    double error = std::numeric_limits<double>::quiet_NaN();
    double residual = std::numeric_limits<double>::quiet_NaN();
    bool diverged = false;
};

struct ConvergenceRecord {
    // Error of the initial iterate against the reference.
    double initial_error = std::numeric_limits<double>::quiet_NaN();
    std::vector<IterationRecord> iterations;

    bool diverged() const noexcept { return !iterations.empty() && iterations.back().diverged; }
};

struct MgritRun {
    std::vector<StateField> trajectory;
    ConvergenceRecord record;
};

// Runs up to max_iters cycles from `initial_iterate` (default: the initial
// condition replicated to every node), recording the relative space-time
// error against `reference` after each cycle. Divergence (non-finite values,
// inadmissible states, or error above the threshold) ends the run and is
// recorded rather than thrown.
MgritRun mgrit_solve(const MgritOptions& options, std::vector<Propagator> propagators,
                     const StateField& initial_condition, int fine_intervals,
                     const std::vector<StateField>& reference,
                     std::optional<std::vector<StateField>> initial_iterate = std::nullopt);

// Checks level count and divisibility of the fine interval count by m^{N_l-1}.
void validate_options(const MgritOptions& options, int fine_intervals);

} // namespace mgritcl
