#pragma once

#include "mgritcl/flux.hpp"
#include "mgritcl/mgrit.hpp"
#include "mgritcl/models.hpp"
#include "mgritcl/serial.hpp"
#include "mgritcl/stepper.hpp"

#include <map>
#include <string>
#include <vector>

namespace mgritcl {

// How levels l >= 1 obtain their propagator when no per-level stepper list is given.
enum class CoarseScheme { Rediscretize, Matched0, Matched1, Exact, Explicit };

struct ConfigEntry {
    std::string key;
    std::string value;
    int line = 0;
};

// A named set of key overrides applied on top of a base configuration.
struct SweepVariant {
    std::string label;
    std::vector<ConfigEntry> overrides;
};

struct ExperimentConfig {
    std::string name = "experiment";
    ModelKind problem = ModelKind::Burgers;
    std::string ic = "sin-stationary";
    double length = 1.0;
    double horizon = 0.475;
    int n_cells = 128;
    int n_steps = 1024;

    MgritOptions mgrit;

    // Per-level scheme, index = level. Filled to n_levels entries by finalise().
    std::vector<StepperSpec> steppers;
    std::vector<FluxKind> fluxes;
    std::vector<int> weno_orders;
    CoarseScheme coarse = CoarseScheme::Rediscretize;

    double epsilon = 1e-6;
    double gamma = 5.0 / 3.0;
    double gravity = 9.81;
    bool characteristic = true;

    std::vector<SweepVariant> variants;

    // Key -> source line, for error messages raised after parsing.
    std::map<std::string, int> lines;
    // Raw base entries in file order; variants are rebuilt from these.
    std::vector<ConfigEntry> entries;

    ConservationModel model() const;
    InitialCondition initial_condition() const;
    SpatialGrid spatial_grid() const { return SpatialGrid(length, n_cells); }
    TemporalGrid temporal_grid() const { return TemporalGrid(horizon, n_steps); }
    FluxConfig flux_config(int level) const;
};

// Plain-text "key = value" lines with '#' comments. Unknown keys, malformed
// values and failed invariants raise ParseError naming the line and key.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

// Applies one key = value pair (also used for sweep overrides and CLI flags).
void apply_entry(ExperimentConfig& config, const ConfigEntry& entry);
// Checks invariants and expands per-level lists to n_levels entries.
void finalise(ExperimentConfig& config);

// The base configuration re-applied with `overrides` on top (later keys win).
ExperimentConfig with_overrides(const ExperimentConfig& base, const std::vector<ConfigEntry>& overrides);

InitialCondition named_initial_condition(const std::string& name, ModelKind problem, double length);

// Iteration-aligned error columns; row 0 is the initial iterate.
struct ConvergenceTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> values;  // values[column][row]

    std::size_t rows() const;
    void add_column(std::string name, std::vector<double> column);
    // Pads every column with NaN to a common length.
    void pad();
};

struct LevelInfo {
    int level = 0;
    int intervals = 0;
    double dt = 0.0;
    double cfl = 0.0;
    std::string scheme;
};

struct ExperimentResult {
    std::string label;
    ConvergenceTable table;
    ConvergenceRecord record;
    SerialRun serial;
    std::vector<LevelInfo> levels;
    double mgrit_wall_time = 0.0;
};

// Per-level propagators for the configuration (level 0 first).
std::vector<Propagator> build_propagators(const ExperimentConfig& config);

ExperimentResult run_experiment(const ExperimentConfig& config);

struct SweepResult {
    ConvergenceTable table;
    std::vector<ExperimentResult> runs;
    std::vector<std::string> failures;  // label: message, for columns that could not run
};

// One column per variant. A failing column is reported as NaN and never
// aborts the sweep.
SweepResult run_sweep(const ExperimentConfig& base, const std::vector<SweepVariant>& variants);

// Variants for a single-parameter sweep; labels default to "<key>=<value>".
std::vector<SweepVariant> make_sweep(const std::string& key, const std::vector<std::string>& values,
                                     const std::vector<std::string>& labels = {});

std::string format_csv(const ConvergenceTable& table);
void emit_csv(const ConvergenceTable& table, const std::string& path);

std::string format_meta(const std::vector<ExperimentResult>& runs);
// Writes the ".meta" sidecar next to a CSV path.
void emit_meta(const std::vector<ExperimentResult>& runs, const std::string& csv_path);

} // namespace mgritcl
