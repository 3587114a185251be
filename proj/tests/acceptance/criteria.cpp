#include "acceptance/criteria.hpp"

#include "convergence.hpp"

#include "mgritcl/errors.hpp"
#include "mgritcl/harness.hpp"
#include "mgritcl/models.hpp"
#include "mgritcl/serial.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#ifndef MGRITCL_CONFIG_DIR
#define MGRITCL_CONFIG_DIR "configs"
#endif

namespace acceptance {

using namespace mgritcl;

namespace {

std::string fmt(double v, int precision = 3) {
    std::ostringstream os;
    os.precision(precision);
    os << v;
    return os.str();
}

std::string fmt_list(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + fmt(v[i]);
    return out;
}

// ---- 1. WENO tables --------------------------------------------------------

Outcome table_fidelity() {
    const auto t = build_tables(2);
    const std::int64_t c[3][3] = {{2, 5, -1}, {-1, 5, 2}, {2, -7, 11}};
    const std::int64_t d[3] = {3, 6, 1};
    const std::int64_t b[3][3][3] = {{{20, -31, 11}, {-31, 50, -19}, {11, -19, 8}},
                                     {{8, -13, 5}, {-13, 26, -13}, {5, -13, 8}},
                                     {{8, -19, 11}, {-19, 50, -31}, {11, -31, 20}}};
    int mismatches = 0;
    for (int r = 0; r < 3; ++r) {
        mismatches += !(t.d_exact(r) == Rational{d[r], 10});
        for (int j = 0; j < 3; ++j) {
            mismatches += !(t.c_exact(r, j) == Rational{c[r][j], 6});
            for (int l = 0; l < 3; ++l) mismatches += !(t.b_exact(r, j, l) == Rational{b[r][j][l], 6});
        }
    }
    return {mismatches == 0, "k=2 c, d, B: " + std::to_string(mismatches) + " of 39 rational entries differ"};
}

// ---- 2. Reconstruction order ---------------------------------------------

Outcome reconstruction_order() {
    bool pass = true;
    std::string detail;
    for (int k = 1; k <= 3; ++k) {
        const double order = support::reconstruction_order(k);
        pass = pass && order >= 2 * k + 0.5;
        detail += (k > 1 ? ", " : "") + std::string("k=") + std::to_string(k) + " order " + fmt(order) +
                  " (>= " + fmt(2 * k + 0.5) + ")";
    }
    return {pass, detail};
}

// ---- 3. Stepper order -----------------------------------------------------

Outcome stepper_order() {
    double worst = 0.0;
    for (double z : {-2.5, -1.0, -0.3, 0.1, 0.7}) {
        const RhsOperator linear = [z](const StateField& u) {
            StateField out = u;
            out.values() *= z;
            return out;
        };
        StateField u(1, 1);
        u(0, 0) = 1.0;
        const double r2 = 1 + z + z * z / 2, r3 = r2 + z * z * z / 6;
        worst = std::max(worst, std::abs(step_ssprk2(linear, u, 1.0)(0, 0) - r2) / std::max(1.0, std::abs(r2)));
        worst = std::max(worst, std::abs(step_ssprk3(linear, u, 1.0)(0, 0) - r3) / std::max(1.0, std::abs(r3)));
    }
    const double o2 = support::stepper_self_convergence(StepperKind::SSPRK2);
    const double o3 = support::stepper_self_convergence(StepperKind::SSPRK3);
    const bool pass = worst <= 1e-14 && o2 >= 1.9 && o3 >= 2.8;
    return {pass, "amplification deviation " + fmt(worst) + " (<= 1e-14), self-convergence SSPRK2 " + fmt(o2) +
                      " (>= 1.9), SSPRK3 " + fmt(o3) + " (>= 2.8)"};
}

// ---- 4. Conservation ------------------------------------------------------

StateField random_smooth_state(const ConservationModel& model, int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double tau = 2.0 * std::numbers::pi;
    const double p1 = tau * unit(rng), p2 = tau * unit(rng), p3 = tau * unit(rng);
    const double a = unit(rng), b = unit(rng);
    StateField u(model.components(), n);
    for (int i = 0; i < n; ++i) {
        const double x = (i + 0.5) / n;
        const double s1 = std::sin(tau * x + p1), s2 = std::sin(2 * tau * x + p2), s3 = std::sin(tau * x + p3);
        switch (model.kind()) {
        case ModelKind::Burgers:
            u(0, i) = (2 * a - 1) + 0.5 * b * s1 + 0.25 * s2;
            break;
        case ModelKind::ShallowWater: {
            const double h = 1.0 + 0.3 * s1, v = (a - 0.5) + 0.3 * s3;
            u(0, i) = h;
            u(1, i) = h * v;
            break;
        }
        case ModelKind::Euler: {
            const double rho = 1.0 + 0.3 * s1, v = (a - 0.5) + 0.2 * s2, p = 1.0 + 0.3 * b * s3;
            u(0, i) = rho;
            u(1, i) = rho * v;
            u(2, i) = p / (model.gamma() - 1.0) + 0.5 * rho * v * v;
            break;
        }
        }
    }
    return u;
}

Outcome conservation() {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> cells(16, 48);
    std::bernoulli_distribution coin(0.5);
    const std::vector<ConservationModel> models{ConservationModel::burgers(), ConservationModel::shallow_water(),
                                                ConservationModel::euler()};
    struct Case {
        ConservationModel model;
        FluxConfig flux;
        StepperSpec stepper;
    };
    std::vector<Case> cases;
    for (const auto& model : models) {
        for (FluxKind fk : {FluxKind::LaxFriedrichs, FluxKind::Roe}) {
            for (int k = 0; k <= kMaxWenoDegree; ++k) {
                for (StepperKind sk : {StepperKind::ForwardEuler, StepperKind::SSPRK2, StepperKind::SSPRK3}) {
                    WenoConfig w;
                    w.k = k;
                    w.characteristic = coin(rng);
                    cases.push_back({model, FluxConfig{fk, w}, StepperSpec{sk, 1}});
                }
            }
        }
    }
    for (StepperKind sk : {StepperKind::LaxFriedrichsFine, StepperKind::MatchedLF0, StepperKind::MatchedLF1}) {
        const int m = sk == StepperKind::LaxFriedrichsFine ? 1 : 4;
        cases.push_back({models[0], FluxConfig{}, StepperSpec{sk, m}});
    }

    double worst = 0.0;
    for (const auto& c : cases) {
        const int n = cells(rng);
        const SpatialGrid grid(1.0, n);
        const SemiDiscreteOperator op(c.model, grid, c.flux);
        StateField u = random_smooth_state(c.model, n, rng);
        double speed = 0.0;
        for (int i = 0; i < n; ++i) speed = std::max(speed, c.model.max_wave_speed(u.cell(i)));
        const double dt = 0.3 * grid.dx() / (std::max(1, c.stepper.m_effective) * speed);
        const TimeStepper phi = make_stepper(c.stepper, op, dt);
        for (int step = 0; step < 5; ++step) {
            const StateField next = phi(u);
            const StateVector before = u.cell_sum(), after = next.cell_sum();
            for (int comp = 0; comp < u.components(); ++comp) {
                const double scale = std::max(u.values().row(comp).cwiseAbs().sum(), 1e-300);
                worst = std::max(worst, std::abs(after(comp) - before(comp)) / scale);
            }
            u = next;
        }
    }
    return {worst <= 1e-12 && cases.size() >= 50, std::to_string(cases.size()) +
                                                      " configurations x 5 steps, worst relative mass change " +
                                                      fmt(worst) + " (<= 1e-12)"};
}

// ---- 5. Roe linearisation -------------------------------------------------

Outcome roe_linearisation() {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> pos(0.2, 3.0), vel(-2.0, 2.0);
    double worst = 0.0;
    for (const auto& model : {ConservationModel::shallow_water(), ConservationModel::euler()}) {
        auto draw = [&]() {
            StateVector u(model.components());
            if (model.kind() == ModelKind::ShallowWater) {
                const double h = pos(rng);
                u << h, h * vel(rng);
            } else {
                const double rho = pos(rng), v = vel(rng), p = pos(rng);
                u << rho, rho * v, p / (model.gamma() - 1.0) + 0.5 * rho * v * v;
            }
            return u;
        };
        for (int trial = 0; trial < 1000; ++trial) {
            const StateVector uL = draw(), uR = draw();
            const auto dec = eigen(model, roe_average(model, uL, uR));
            const StateVector alpha = dec.left * (uR - uL);
            StateVector jump = StateVector::Zero(model.components());
            for (int k = 0; k < model.components(); ++k) jump += dec.eigenvalues(k) * alpha(k) * dec.right.col(k);
            const StateVector df = flux(model, uR) - flux(model, uL);
            worst = std::max(worst, (df - jump).norm() / std::max(1.0, df.norm()));
        }
    }
    return {worst <= 1e-8, "2 x 1000 random pairs, worst relative defect " + fmt(worst) + " (<= 1e-8)"};
}

// ---- 6. Fixed point -------------------------------------------------------

const char* kFixedPointCases[] = {
    "problem = burgers\nic = sin-stationary\nT = 0.2\nN_x = 32\nN_t = 32\nn_levels = 3\nm = 2\n"
    "stepper = SSPRK3\nflux = lf\nweno_order = 5\n",
    "problem = burgers\nic = sin-moving\nT = 0.2\nN_x = 32\nN_t = 64\nn_levels = 4\nm = 2\n"
    "stepper = LF-FE\ncoarse = matched1\n",
    "problem = euler\nic = euler-energy-sin\nT = 0.1\nN_x = 32\nN_t = 32\nn_levels = 3\nm = 2\n"
    "stepper = SSPRK3\nflux = roe\nweno_order = 3\n",
    "problem = shallow-water\nic = sw-scaled\nT = 0.1\nN_x = 32\nN_t = 32\nn_levels = 2\nm = 4\n"
    "stepper = SSPRK2\nflux = lf\nweno_order = 7\n",
};

Outcome fixed_point() {
    double worst = 0.0;
    int runs = 0;
    bool diverged = false;
    for (const char* text : kFixedPointCases) {
        const ExperimentConfig config = parse_config(text);
        const StateField u0 = discretise_ic(config.initial_condition(), config.spatial_grid());
        const auto reference = propagate_serial(build_propagators(config).front(), u0, config.n_steps);
        for (CycleType cycle : {CycleType::V, CycleType::F}) {
            for (RelaxationType relax : {RelaxationType::F, RelaxationType::FCF}) {
                for (RestrictionGuess guess : {RestrictionGuess::Injection, RestrictionGuess::LastStep}) {
                    MgritOptions opts = config.mgrit;
                    opts.cycle = cycle;
                    opts.relaxation = relax;
                    opts.guess = guess;
                    opts.max_iters = 1;
                    const auto run =
                        mgrit_solve(opts, build_propagators(config), u0, config.n_steps, reference, reference);
                    const auto& it = run.record.iterations.front();
                    diverged = diverged || it.diverged;
                    worst = std::max(worst, it.error);
                    ++runs;
                }
            }
        }
    }
    return {!diverged && worst <= 1e-12, std::to_string(runs) +
                                             " runs (V/F x F/FCF x injection/laststep x 4 problems), worst "
                                             "relative change " +
                                             fmt(worst) + " (<= 1e-12)"};
}

// ---- 7. Two-level exactness ----------------------------------------------

Outcome two_level_exactness() {
    double worst = 0.0;
    std::string detail;
    const std::pair<const char*, const char*> fine[] = {{"SSPRK3/WENO5", "stepper = SSPRK3\nflux = lf\nweno_order = 5\n"},
                                                        {"LF-FE", "stepper = LF-FE\n"}};
    for (const auto& [name, stepper] : fine) {
        for (int m : {2, 4}) {
            const std::string text = std::string("problem = burgers\nic = sin-stationary\nN_x = 64\nN_t = 128\n"
                                                 "n_levels = 2\nmax_iters = 1\ncoarse = exact\n") +
                                     stepper + "m = " + std::to_string(m) + "\n";
            const ExperimentResult r = run_experiment(parse_config(text));
            const double e = r.table.values.front().at(1);
            worst = std::isnan(e) ? std::numeric_limits<double>::infinity() : std::max(worst, e);
            detail += std::string(detail.empty() ? "" : ", ") + name +
                      " m=" + std::to_string(m) + ": " + fmt(e);
        }
    }
    return {worst < 1e-10, "error after one iteration " + detail + " (< 1e-10)"};
}

// ---- 8. Matching asymptotics ---------------------------------------------

Outcome matching_asymptotics() {
    const auto s = support::matching_slopes(2);
    return {s.order1 >= 1.9 && s.order0 >= 0.9,
            "slope order-1 matching " + fmt(s.order1) + " (>= 1.9), order-0 matching " + fmt(s.order0) +
                " (>= 0.9), plain rediscretisation " + fmt(s.rediscretized)};
}

// ---- 9/10. Figure-level runs ---------------------------------------------

double as_rank(double v) { return std::isnan(v) ? std::numeric_limits<double>::infinity() : v; }

class FigureRuns {
public:
    explicit FigureRuns(std::string dir) : dir_(std::move(dir)) {}

    std::vector<std::string> files() const {
        std::vector<std::string> out;
        for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
            if (entry.path().extension() == ".cfg") out.push_back(entry.path().filename().string());
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    const SweepResult& get(const std::string& file, int parallelism) {
        const auto key = std::make_pair(file, parallelism);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, run(file, parallelism)).first;
        return it->second;
    }

    std::vector<double> column(const std::string& file, const std::string& label) {
        const auto& table = get(file, 1).table;
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (table.columns[c] == label) return table.values[c];
        }
        throw ConfigError(file + " has no column '" + label + "'");
    }

private:
    SweepResult run(const std::string& file, int parallelism) const {
        const std::string path = dir_ + "/" + file;
        std::ifstream in(path, std::ios::binary);
        if (!in) throw FileError(path, "cannot open for reading");
        std::ostringstream text;
        text << in.rdbuf() << "\nparallelism = " << parallelism << "\n";
        const ExperimentConfig config = parse_config(text.str());
        auto variants = config.variants;
        if (variants.empty()) variants.push_back(SweepVariant{config.name, {}});
        return run_sweep(config, variants);
    }

    std::string dir_;
    std::map<std::pair<std::string, int>, SweepResult> cache_;
};

struct SubResult {
    bool pass;
    std::string detail;
};

SubResult rediscretisation_vs_matching(FigureRuns& runs) {
    const std::string file = "fine-matching-rediscretization.cfg";
    const auto redisc = runs.column(file, "rediscretize");
    const bool diverged = std::isnan(redisc.at(1));
    std::string detail = "rediscretize errors " + fmt_list(redisc) + (diverged ? " (NaN at 1)" : " (finite at 1)");
    bool pass = diverged;
    for (const char* label : {"matched0", "matched1"}) {
        const auto col = runs.column(file, label);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < col.size() && i <= 10; ++i) best = std::min(best, as_rank(col[i]));
        const double reduction = col[0] / best;
        pass = pass && reduction >= 100.0;
        detail += std::string("; ") + label + " reduction " + fmt(reduction) + "x";
    }
    return {pass, detail};
}

SubResult first_order_below_zeroth(FigureRuns& runs) {
    const std::string file = "fine-matching-rediscretization.cfg";
    const auto m0 = runs.column(file, "matched0"), m1 = runs.column(file, "matched1");
    int violations = 0;
    double worst_ratio = 0.0;
    for (std::size_t i = 1; i <= 10 && i < m0.size(); ++i) {
        violations += !(as_rank(m1[i]) <= as_rank(m0[i]));
        worst_ratio = std::max(worst_ratio, as_rank(m1[i]) / as_rank(m0[i]));
    }
    return {violations == 0, "max ratio matched1/matched0 over iterations 1-10 = " + fmt(worst_ratio) + ", " +
                                 std::to_string(violations) + " violations"};
}

SubResult laststep_not_worse(FigureRuns& runs) {
    const std::string file = "restriction-guess.cfg";
    const auto inj = runs.column(file, "injection-F"), last = runs.column(file, "laststep-F");
    int violations = 0;
    for (std::size_t i = 1; i <= 10 && i < inj.size(); ++i) violations += !(as_rank(last[i]) <= as_rank(inj[i]));
    return {violations == 0, "injection " + fmt_list(inj) + " vs laststep " + fmt_list(last) + ", " +
                                 std::to_string(violations) + " violations"};
}

SubResult cfl_degrades(FigureRuns& runs) {
    const std::string file = "cfl-weno5-ssprk3-roe.cfg";
    std::vector<double> e10;
    for (const char* label : {"c=.24", "c=.48", "c=.95", "c=1.9"}) e10.push_back(runs.column(file, label).at(10));
    bool monotone = true;
    for (std::size_t i = 1; i < e10.size(); ++i) monotone = monotone && as_rank(e10[i]) >= as_rank(e10[i - 1]);
    return {monotone, "iteration-10 error for c = .24 .48 .95 1.9: " + fmt_list(e10)};
}

SubResult first_order_best(FigureRuns& runs) {
    bool pass = true;
    std::string detail;
    for (const char* problem : {"burgers", "shallow-water", "euler"}) {
        const std::string file = std::string("high-order-") + problem + ".cfg";
        for (const char* flux : {"lf", "roe"}) {
            std::vector<double> e10;
            for (int s : {1, 3, 5, 7}) {
                e10.push_back(runs.column(file, std::string(flux) + "-s" + std::to_string(s)).at(10));
            }
            bool best = !std::isnan(e10[0]);
            for (std::size_t i = 1; i < e10.size(); ++i) best = best && e10[0] < as_rank(e10[i]);
            pass = pass && best;
            detail += std::string(detail.empty() ? "" : "; ") + problem + "/" + flux + " s=1,3,5,7: " +
                      fmt_list(e10) + (best ? "" : " [s=1 not smallest]");
        }
    }
    return {pass, detail};
}

Outcome figure_reproduction(FigureRuns& runs) {
    const std::pair<const char*, SubResult (*)(FigureRuns&)> parts[] = {
        {"a", rediscretisation_vs_matching}, {"b", first_order_below_zeroth}, {"c", laststep_not_worse},
        {"d", cfl_degrades},                 {"e", first_order_best},
    };
    bool pass = true;
    std::string summary, detail;
    for (const auto& [name, fn] : parts) {
        SubResult r{false, ""};
        try {
            r = fn(runs);
        } catch (const std::exception& err) {
            r.detail = std::string("error: ") + err.what();
        }
        pass = pass && r.pass;
        summary += std::string(summary.empty() ? "" : ", ") + "(" + name + ") " + (r.pass ? "pass" : "fail");
        detail += std::string("\n        (") + name + ") " + r.detail;
    }
    return {pass, summary + detail};
}

Outcome determinism(FigureRuns& runs) {
    int identical = 0;
    std::vector<std::string> differing;
    const auto files = runs.files();
    for (const auto& f : files) {
        if (format_csv(runs.get(f, 1).table) == format_csv(runs.get(f, 8).table)) {
            ++identical;
        } else {
            differing.push_back(f);
        }
    }
    std::string detail = std::to_string(identical) + " of " + std::to_string(files.size()) +
                         " config CSVs byte-identical at parallelism 1 and 8";
    for (const auto& f : differing) detail += "; differs: " + f;
    return {!files.empty() && differing.empty(), detail};
}

} // namespace

std::string default_config_dir() { return MGRITCL_CONFIG_DIR; }

std::vector<Criterion> criteria(const Options& options) {
    auto runs = std::make_shared<FigureRuns>(options.config_dir.empty() ? default_config_dir() : options.config_dir);
    std::vector<Criterion> out{
        {1, "WENO table fidelity", table_fidelity},
        {2, "reconstruction order", reconstruction_order},
        {3, "stepper order", stepper_order},
        {4, "conservation", conservation},
        {5, "Roe linearisation", roe_linearisation},
        {6, "MGRIT fixed point", fixed_point},
        {7, "two-level exactness", two_level_exactness},
        {8, "matching asymptotics", matching_asymptotics},
    };
    std::function<Outcome()> fig = [runs] { return figure_reproduction(*runs); };
    std::function<Outcome()> det = [runs] { return determinism(*runs); };
    if (options.quick) fig = det = nullptr;
    out.push_back({9, "figure-level reproduction", fig});
    out.push_back({10, "determinism across parallelism", det});
    return out;
}

bool run_all(std::ostream& os, const Options& options) {
    bool all = true;
    for (const auto& c : criteria(options)) {
        if (!c.check) {
            os << "SKIP  " << c.id << ". " << c.title << ": not run in quick mode" << std::endl;
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& err) {
            o = {false, std::string("error: ") + err.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        os << (o.pass ? "PASS  " : "FAIL  ") << c.id << ". " << c.title << ": " << o.detail << " [" << fmt(secs)
           << " s]" << std::endl;
    }
    return all;
}

} // namespace acceptance
