#include "mgritcl/harness.hpp"

#include "mgritcl/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

namespace mgritcl {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Splits on whitespace and commas.
std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string token;
    for (char c : value) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!token.empty()) out.push_back(std::move(token));
            token.clear();
        } else {
            token.push_back(c);
        }
    }
    if (!token.empty()) out.push_back(std::move(token));
    return out;
}

double parse_double(const ConfigEntry& e) {
    double v = 0.0;
    const std::string s = trim(e.value);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw ParseError(e.line, e.key, "expected a number, got '" + e.value + "'");
    }
    return v;
}

int parse_int(const ConfigEntry& e) {
    int v = 0;
    const std::string s = trim(e.value);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(e.line, e.key, "expected an integer, got '" + e.value + "'");
    }
    return v;
}

bool parse_bool(const ConfigEntry& e) {
    const std::string s = lower(trim(e.value));
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw ParseError(e.line, e.key, "expected true or false, got '" + e.value + "'");
}

template <class T, class F>
std::vector<T> parse_level_list(const ConfigEntry& e, F&& parse_one) {
    const auto tokens = split_list(e.value);
    if (tokens.empty()) throw ParseError(e.line, e.key, "empty value");
    std::vector<T> out;
    for (const auto& t : tokens) {
        try {
            out.push_back(parse_one(t));
        } catch (const ConfigError& err) {
            throw ParseError(e.line, e.key, err.what());
        }
    }
    return out;
}

FluxKind parse_flux(const std::string& text) {
    const std::string t = lower(text);
    if (t == "lf" || t == "lax-friedrichs" || t == "rusanov") return FluxKind::LaxFriedrichs;
    if (t == "roe") return FluxKind::Roe;
    throw ConfigError("unknown flux '" + text + "'");
}

ModelKind parse_problem(const ConfigEntry& e) {
    const std::string t = lower(trim(e.value));
    if (t == "burgers") return ModelKind::Burgers;
    if (t == "shallow-water" || t == "sw" || t == "shallow_water") return ModelKind::ShallowWater;
    if (t == "euler") return ModelKind::Euler;
    throw ParseError(e.line, e.key, "unknown problem '" + e.value + "'");
}

int line_of(const ExperimentConfig& c, const std::string& key) {
    const auto it = c.lines.find(key);
    return it == c.lines.end() ? 0 : it->second;
}

template <class T>
void expand_levels(std::vector<T>& v, int n_levels, const ExperimentConfig& c, const std::string& key) {
    if (v.size() == 1) {
        v.resize(n_levels, v.front());
    } else if (static_cast<int>(v.size()) != n_levels) {
        throw ParseError(line_of(c, key), key,
                         "expected 1 or n_levels = " + std::to_string(n_levels) + " values, got " +
                             std::to_string(v.size()));
    }
}

std::string level_scheme_name(const ExperimentConfig& c, int l) {
    std::ostringstream os;
    if (l > 0 && c.coarse == CoarseScheme::Exact) {
        os << "exact(" << integer_power(c.mgrit.coarsening, l) << " x level 0)";
        return os.str();
    }
    StepperSpec spec = c.steppers[l];
    if (spec.kind == StepperKind::Rediscretize) {
        spec = c.steppers.front();
        os << "rediscretized ";
    }
    os << to_string(spec.kind);
    if (spec.uses_operator()) {
        os << " " << to_string(c.fluxes[l]) << " s=" << c.weno_orders[l];
    }
    return os.str();
}

std::string format_double(double v) {
    if (std::isnan(v)) return "NaN";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FileError(path, "cannot open for writing");
    out << contents;
    out.flush();
    if (!out) throw FileError(path, "write failed");
}

} // namespace

ConservationModel ExperimentConfig::model() const {
    switch (problem) {
    case ModelKind::Burgers: return ConservationModel::burgers();
    case ModelKind::ShallowWater: return ConservationModel::shallow_water(gravity);
    case ModelKind::Euler: return ConservationModel::euler(gamma);
    }
    throw ConfigError("unknown problem");
}

InitialCondition ExperimentConfig::initial_condition() const {
    return named_initial_condition(ic, problem, length);
}

FluxConfig ExperimentConfig::flux_config(int level) const {
    FluxConfig fc;
    fc.kind = fluxes.at(level);
    fc.weno = weno_config_for_order(weno_orders.at(level));
    fc.weno.epsilon = epsilon;
    fc.weno.characteristic = characteristic;
    return fc;
}

InitialCondition named_initial_condition(const std::string& name, ModelKind problem, double length) {
    const double k = 2.0 * std::numbers::pi / length;
    auto scalar = [](auto f) {
        return InitialCondition([f](double x) {
            StateVector u(1);
            u(0) = f(x);
            return u;
        });
    };
    auto require = [&](ModelKind expected) {
        if (problem != expected) {
            throw ConfigError("initial condition '" + name + "' is for " + to_string(expected) + ", not " +
                              to_string(problem));
        }
    };
    if (name == "sin-stationary") {
        require(ModelKind::Burgers);
        return scalar([k](double x) { return std::sin(k * x); });
    }
    if (name == "sin-moving") {
        require(ModelKind::Burgers);
        return scalar([k](double x) { return 0.5 * (1.0 + std::sin(k * x)); });
    }
    if (name == "burgers-43") {
        require(ModelKind::Burgers);
        return scalar([k](double x) { return 4.0 / 3.0 * std::sin(k * x); });
    }
    if (name == "sw-scaled") {
        require(ModelKind::ShallowWater);
        return [k](double x) {
            StateVector u(2);
            u << (1.0 + 0.5 * std::sin(k * x)) / 11.0, 0.0;
            return u;
        };
    }
    if (name == "euler-energy-sin") {
        require(ModelKind::Euler);
        return [k](double x) {
            StateVector u(3);
            u << 1.0, 0.0, 1.0 + 0.5 * std::sin(k * x);
            return u;
        };
    }
    throw ConfigError("unknown initial condition '" + name + "'");
}

void apply_entry(ExperimentConfig& c, const ConfigEntry& e) {
    const std::string& key = e.key;
    c.lines[key] = e.line;
    c.entries.push_back(e);
    if (key == "name") {
        c.name = trim(e.value);
    } else if (key == "problem") {
        c.problem = parse_problem(e);
    } else if (key == "ic") {
        c.ic = trim(e.value);
    } else if (key == "L") {
        c.length = parse_double(e);
    } else if (key == "T") {
        c.horizon = parse_double(e);
    } else if (key == "N_x") {
        c.n_cells = parse_int(e);
    } else if (key == "N_t") {
        c.n_steps = parse_int(e);
    } else if (key == "n_levels") {
        c.mgrit.n_levels = parse_int(e);
    } else if (key == "m") {
        c.mgrit.coarsening = parse_int(e);
    } else if (key == "cycle") {
        const std::string v = lower(trim(e.value));
        if (v == "v") c.mgrit.cycle = CycleType::V;
        else if (v == "f") c.mgrit.cycle = CycleType::F;
        else throw ParseError(e.line, key, "expected V or F, got '" + e.value + "'");
    } else if (key == "relaxation") {
        const std::string v = lower(trim(e.value));
        if (v == "f") c.mgrit.relaxation = RelaxationType::F;
        else if (v == "fcf") c.mgrit.relaxation = RelaxationType::FCF;
        else throw ParseError(e.line, key, "expected F or FCF, got '" + e.value + "'");
    } else if (key == "restriction_guess") {
        const std::string v = lower(trim(e.value));
        if (v == "injection") c.mgrit.guess = RestrictionGuess::Injection;
        else if (v == "laststep" || v == "last-step" || v == "last_step") c.mgrit.guess = RestrictionGuess::LastStep;
        else throw ParseError(e.line, key, "expected injection or laststep, got '" + e.value + "'");
    } else if (key == "max_iters") {
        c.mgrit.max_iters = parse_int(e);
    } else if (key == "divergence_threshold") {
        c.mgrit.divergence_threshold = parse_double(e);
    } else if (key == "parallelism") {
        c.mgrit.parallelism = parse_int(e);
    } else if (key == "epsilon") {
        c.epsilon = parse_double(e);
    } else if (key == "gamma") {
        c.gamma = parse_double(e);
    } else if (key == "g") {
        c.gravity = parse_double(e);
    } else if (key == "characteristic") {
        c.characteristic = parse_bool(e);
    } else if (key == "stepper") {
        c.steppers = parse_level_list<StepperSpec>(e, [](const std::string& t) {
            return StepperSpec{parse_stepper_kind(t), 1};
        });
    } else if (key == "flux") {
        c.fluxes = parse_level_list<FluxKind>(e, parse_flux);
    } else if (key == "weno_order") {
        c.weno_orders = parse_level_list<int>(e, [&](const std::string& t) {
            return parse_int(ConfigEntry{key, t, e.line});
        });
    } else if (key == "coarse") {
        const std::string v = lower(trim(e.value));
        if (v == "rediscretize" || v == "rediscretise") c.coarse = CoarseScheme::Rediscretize;
        else if (v == "matched0") c.coarse = CoarseScheme::Matched0;
        else if (v == "matched1") c.coarse = CoarseScheme::Matched1;
        else if (v == "exact") c.coarse = CoarseScheme::Exact;
        else throw ParseError(e.line, key, "expected rediscretize, matched0, matched1 or exact, got '" + e.value + "'");
    } else {
        throw ParseError(e.line, key, "unknown key");
    }
}

void finalise(ExperimentConfig& c) {
    auto fail = [&](const std::string& key, const std::string& what) {
        throw ParseError(line_of(c, key), key, what);
    };
    if (!(c.length > 0.0)) fail("L", "must be positive");
    if (!(c.horizon > 0.0)) fail("T", "must be positive");
    if (c.n_cells < 1) fail("N_x", "must be at least 1");
    if (c.n_steps < 1) fail("N_t", "must be at least 1");
    if (c.mgrit.n_levels < 1) fail("n_levels", "must be at least 1");
    if (c.mgrit.coarsening < 2) fail("m", "must be at least 2");
    if (c.mgrit.max_iters < 0) fail("max_iters", "must be non-negative");
    if (c.mgrit.parallelism < 1) fail("parallelism", "must be at least 1");
    if (!(c.epsilon > 0.0)) fail("epsilon", "must be positive");
    if (!(c.gamma > 1.0)) fail("gamma", "must exceed 1");
    if (!(c.gravity > 0.0)) fail("g", "must be positive");
    if (!(c.mgrit.divergence_threshold > 0.0)) fail("divergence_threshold", "must be positive");

    const int n_levels = c.mgrit.n_levels;
    if (n_levels > 1) {
        long long divisor = 1;
        for (int l = 1; l < n_levels; ++l) {
            divisor *= c.mgrit.coarsening;
            if (divisor > c.n_steps) break;
        }
        if (divisor > c.n_steps || c.n_steps % divisor != 0) {
            fail("N_t", "N_t = " + std::to_string(c.n_steps) + " is not divisible by m^(n_levels-1) = " +
                            std::to_string(divisor));
        }
    }

    try {
        (void)c.initial_condition();
    } catch (const ConfigError& err) {
        fail("ic", err.what());
    }

    if (c.steppers.empty()) c.steppers = {StepperSpec{StepperKind::SSPRK3, 1}};
    if (c.fluxes.empty()) c.fluxes = {FluxKind::LaxFriedrichs};
    if (c.weno_orders.empty()) c.weno_orders = {5};

    if (c.steppers.size() == 1) {
        if (c.coarse == CoarseScheme::Explicit) c.coarse = CoarseScheme::Rediscretize;
        StepperSpec coarse{StepperKind::Rediscretize, 1};
        if (c.coarse == CoarseScheme::Matched0) coarse.kind = StepperKind::MatchedLF0;
        if (c.coarse == CoarseScheme::Matched1) coarse.kind = StepperKind::MatchedLF1;
        c.steppers.resize(n_levels, coarse);
    } else {
        if (c.coarse != CoarseScheme::Rediscretize && c.coarse != CoarseScheme::Explicit) {
            fail("coarse", "cannot be combined with a per-level stepper list");
        }
        c.coarse = CoarseScheme::Explicit;
        expand_levels(c.steppers, n_levels, c, "stepper");
    }
    expand_levels(c.fluxes, n_levels, c, "flux");
    expand_levels(c.weno_orders, n_levels, c, "weno_order");

    const StepperSpec& fine = c.steppers.front();
    if (fine.kind == StepperKind::Rediscretize || fine.is_matched()) {
        fail("stepper", "the finest level needs a concrete, non-matched scheme");
    }
    for (int l = 0; l < n_levels; ++l) {
        const StepperKind kind = c.steppers[l].kind == StepperKind::Rediscretize ? fine.kind : c.steppers[l].kind;
        const bool lf_kernel = kind == StepperKind::LaxFriedrichsFine || kind == StepperKind::MatchedLF0 ||
                               kind == StepperKind::MatchedLF1;
        if (lf_kernel && c.problem != ModelKind::Burgers) {
            fail(c.lines.count("coarse") && l > 0 ? "coarse" : "stepper",
                 "the Lax-Friedrichs kernel steppers are defined for Burgers only");
        }
        try {
            (void)weno_config_for_order(c.weno_orders[l]);
        } catch (const ConfigError& err) {
            fail("weno_order", err.what());
        }
    }
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig config;
    std::vector<ConfigEntry> entries;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "", "expected 'key = value'");
        ConfigEntry e{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no};
        if (e.key.empty()) throw ParseError(line_no, "", "missing key");
        if (e.value.empty()) throw ParseError(line_no, e.key, "missing value");
        entries.push_back(std::move(e));
    }

    ConfigEntry sweep_param, sweep_values, sweep_labels;
    for (const auto& e : entries) {
        if (e.key == "sweep.param") {
            sweep_param = e;
        } else if (e.key == "sweep.values") {
            sweep_values = e;
        } else if (e.key == "sweep.labels") {
            sweep_labels = e;
        } else if (e.key.rfind("variant.", 0) == 0) {
            const auto dot = e.key.find('.', 8);
            if (dot == std::string::npos || dot == 8 || dot + 1 == e.key.size()) {
                throw ParseError(e.line, e.key, "expected variant.<label>.<key>");
            }
            const std::string label = e.key.substr(8, dot - 8);
            ConfigEntry override_entry{e.key.substr(dot + 1), e.value, e.line};
            auto it = std::find_if(config.variants.begin(), config.variants.end(),
                                   [&](const SweepVariant& v) { return v.label == label; });
            if (it == config.variants.end()) {
                config.variants.push_back(SweepVariant{label, {}});
                it = std::prev(config.variants.end());
            }
            it->overrides.push_back(std::move(override_entry));
        } else {
            apply_entry(config, e);
        }
    }

    if (!sweep_param.key.empty() || !sweep_values.key.empty()) {
        if (sweep_param.key.empty()) throw ParseError(sweep_values.line, "sweep.values", "sweep.param is missing");
        if (sweep_values.key.empty()) throw ParseError(sweep_param.line, "sweep.param", "sweep.values is missing");
        if (!config.variants.empty()) {
            throw ParseError(sweep_param.line, "sweep.param", "cannot be combined with variant.* keys");
        }
        const auto values = split_list(sweep_values.value);
        const auto labels = sweep_labels.key.empty() ? std::vector<std::string>{} : split_list(sweep_labels.value);
        if (!labels.empty() && labels.size() != values.size()) {
            throw ParseError(sweep_labels.line, "sweep.labels", "needs one label per value");
        }
        config.variants = make_sweep(trim(sweep_param.value), values, labels);
        for (auto& v : config.variants) {
            for (auto& o : v.overrides) o.line = sweep_values.line;
        }
    }

    finalise(config);
    // Every variant must produce a valid configuration; report the first problem.
    for (const auto& v : config.variants) {
        (void)with_overrides(config, v.overrides);
    }
    return config;
}

ExperimentConfig with_overrides(const ExperimentConfig& base, const std::vector<ConfigEntry>& overrides) {
    ExperimentConfig config;
    for (const auto& e : base.entries) apply_entry(config, e);
    for (const auto& e : overrides) apply_entry(config, e);
    config.variants = base.variants;
    finalise(config);
    return config;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError(path, "cannot open for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::vector<SweepVariant> make_sweep(const std::string& key, const std::vector<std::string>& values,
                                     const std::vector<std::string>& labels) {
    if (!labels.empty() && labels.size() != values.size()) {
        throw ConfigError("sweep needs one label per value");
    }
    std::vector<SweepVariant> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.push_back(SweepVariant{labels.empty() ? key + "=" + values[i] : labels[i], {ConfigEntry{key, values[i], 0}}});
    }
    return out;
}

std::size_t ConvergenceTable::rows() const {
    std::size_t n = 0;
    for (const auto& c : values) n = std::max(n, c.size());
    return n;
}

void ConvergenceTable::add_column(std::string name, std::vector<double> column) {
    columns.push_back(std::move(name));
    values.push_back(std::move(column));
}

void ConvergenceTable::pad() {
    const std::size_t n = rows();
    for (auto& c : values) c.resize(n, kNaN);
}

std::vector<Propagator> build_propagators(const ExperimentConfig& config) {
    const ConservationModel model = config.model();
    const SpatialGrid grid = config.spatial_grid();
    const double dt = config.temporal_grid().dt();
    const int m = config.mgrit.coarsening;

    std::vector<Propagator> props;
    for (int l = 0; l < config.mgrit.n_levels; ++l) {
        if (l > 0 && config.coarse == CoarseScheme::Exact) {
            props.push_back(compose(props.front(), integer_power(m, l)));
            continue;
        }
        const SemiDiscreteOperator op(model, grid, config.flux_config(l));
        TimeStepper stepper = make_level_stepper(config.steppers.front(), config.steppers[l], op, dt, l, m);
        props.emplace_back([stepper = std::move(stepper)](const StateField& u) { return stepper(u); });
    }
    return props;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    const ConservationModel model = config.model();
    const SpatialGrid grid = config.spatial_grid();
    const TemporalGrid temporal = config.temporal_grid();
    const StateField u0 = discretise_ic(config.initial_condition(), grid);
    if (u0.components() != model.components()) {
        throw ConfigError("initial condition does not match the model's component count");
    }

    std::vector<Propagator> props = build_propagators(config);

    const auto serial_start = std::chrono::steady_clock::now();
    bool serial_diverged = false;
    auto reference = propagate_serial(props.front(), u0, temporal.steps(), &serial_diverged);
    SerialRun serial{SpaceTimeTrajectory(temporal, std::move(reference))};
    serial.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - serial_start).count();
    serial.diverged = serial_diverged;
    if (serial_diverged) {
        throw DivergenceError("the serial fine-grid reference diverged");
    }
    serial.max_cfl_observed = max_cfl(serial.trajectory, model, temporal.dt(), grid.dx());

    ExperimentResult result{config.name, {}, {}, std::move(serial), {}, 0.0};
    for (int l = 0; l < config.mgrit.n_levels; ++l) {
        const int scale = integer_power(config.mgrit.coarsening, l);
        result.levels.push_back(LevelInfo{l, config.n_steps / scale, temporal.dt() * scale,
                                          result.serial.max_cfl_observed * scale, level_scheme_name(config, l)});
    }

    const auto start = std::chrono::steady_clock::now();
    MgritRun run = mgrit_solve(config.mgrit, std::move(props), u0, config.n_steps, result.serial.trajectory.states);
    result.mgrit_wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::vector<double> column{run.record.initial_error};
    for (const auto& it : run.record.iterations) column.push_back(it.error);
    column.resize(static_cast<std::size_t>(config.mgrit.max_iters) + 1, kNaN);
    result.table.add_column(config.name, std::move(column));
    result.record = std::move(run.record);
    return result;
}

SweepResult run_sweep(const ExperimentConfig& base, const std::vector<SweepVariant>& variants) {
    SweepResult out;
    for (const auto& v : variants) {
        try {
            ExperimentConfig config = with_overrides(base, v.overrides);
            config.name = v.label;
            ExperimentResult r = run_experiment(config);
            out.table.add_column(v.label, r.table.values.front());
            out.runs.push_back(std::move(r));
        } catch (const std::exception& err) {
            out.failures.push_back(v.label + ": " + err.what());
            out.table.add_column(v.label, std::vector<double>(static_cast<std::size_t>(base.mgrit.max_iters) + 1, kNaN));
        }
    }
    out.table.pad();
    return out;
}

std::string format_csv(const ConvergenceTable& table) {
    std::string out = "iteration";
    for (const auto& c : table.columns) out += "," + c;
    out += "\n";
    const std::size_t rows = table.rows();
    for (std::size_t r = 0; r < rows; ++r) {
        out += std::to_string(r);
        for (const auto& col : table.values) {
            out += ",";
            out += format_double(r < col.size() ? col[r] : kNaN);
        }
        out += "\n";
    }
    return out;
}

void emit_csv(const ConvergenceTable& table, const std::string& path) {
    write_file(path, format_csv(table));
}

std::string format_meta(const std::vector<ExperimentResult>& runs) {
    std::ostringstream os;
    for (const auto& r : runs) {
        os << "[" << r.label << "]\n";
        os << "serial_wall_time=" << format_double(r.serial.wall_time) << "\n";
        os << "mgrit_wall_time=" << format_double(r.mgrit_wall_time) << "\n";
        os << "iterations=" << r.record.iterations.size() << "\n";
        os << "diverged=" << (r.record.diverged() ? "true" : "false") << "\n";
        for (const auto& lvl : r.levels) {
            os << "level" << lvl.level << ".intervals=" << lvl.intervals << "\n";
            os << "level" << lvl.level << ".dt=" << format_double(lvl.dt) << "\n";
            os << "level" << lvl.level << ".max_cfl=" << format_double(lvl.cfl) << "\n";
            os << "level" << lvl.level << ".scheme=" << lvl.scheme << "\n";
        }
    }
    return os.str();
}

void emit_meta(const std::vector<ExperimentResult>& runs, const std::string& csv_path) {
    std::string path = csv_path;
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) path.resize(path.size() - 4);
    write_file(path + ".meta", format_meta(runs));
}

} // namespace mgritcl
