#include "mgritcl/errors.hpp"
#include "mgritcl/harness.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef MGRITCL_HAVE_ACCEPTANCE
#include "acceptance/criteria.hpp"
#endif

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::optional<int> parallelism;
    std::optional<int> max_iters;
};

void add_common(CLI::App& cmd, CommonOptions& opts) {
    cmd.add_option("--config", opts.config_path, "Experiment configuration file")->required()->check(CLI::ExistingFile);
    cmd.add_option("--out", opts.out_path, "Output CSV path (a .meta sidecar is written next to it)")->required();
    cmd.add_option("--parallelism", opts.parallelism, "Worker threads for chunk-parallel relaxation")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--max-iters", opts.max_iters, "Override max_iters")->check(CLI::NonNegativeNumber);
}

mgritcl::ExperimentConfig load(const CommonOptions& opts) {
    const auto base = mgritcl::load_config(opts.config_path);
    std::vector<mgritcl::ConfigEntry> overrides;
    if (opts.parallelism) overrides.push_back({"parallelism", std::to_string(*opts.parallelism), 0});
    if (opts.max_iters) overrides.push_back({"max_iters", std::to_string(*opts.max_iters), 0});
    return overrides.empty() ? base : mgritcl::with_overrides(base, overrides);
}

void report(const mgritcl::ExperimentResult& r) {
    std::cerr << r.label << ": " << r.record.iterations.size() << " iterations, final error "
              << (r.record.iterations.empty() ? r.record.initial_error : r.record.iterations.back().error)
              << (r.record.diverged() ? " (diverged)" : "") << ", coarsest CFL " << r.levels.back().cfl << "\n";
}

int run_solve(const CommonOptions& opts) {
    const auto config = load(opts);
    const auto result = mgritcl::run_experiment(config);
    mgritcl::emit_csv(result.table, opts.out_path);
    mgritcl::emit_meta({result}, opts.out_path);
    report(result);
    return 0;
}

int run_sweep(const CommonOptions& opts, const std::string& param, const std::vector<std::string>& values,
              const std::vector<std::string>& labels) {
    const auto config = load(opts);
    std::vector<mgritcl::SweepVariant> variants =
        param.empty() ? config.variants : mgritcl::make_sweep(param, values, labels);
    if (variants.empty()) {
        throw mgritcl::ConfigError("no sweep defined: use sweep.param/sweep.values, variant.* keys or --param");
    }
    const auto result = mgritcl::run_sweep(config, variants);
    mgritcl::emit_csv(result.table, opts.out_path);
    mgritcl::emit_meta(result.runs, opts.out_path);
    for (const auto& r : result.runs) report(r);
    for (const auto& f : result.failures) std::cerr << "failed: " << f << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parallel-in-time MGRIT solver for 1D conservation laws"};
    app.require_subcommand(1);

    CommonOptions solve_opts;
    auto* solve = app.add_subcommand("solve", "Run one experiment and write its convergence table");
    add_common(*solve, solve_opts);

    CommonOptions sweep_opts;
    std::string param;
    std::vector<std::string> values, labels;
    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep, one CSV column per value");
    add_common(*sweep, sweep_opts);
    sweep->add_option("--param", param, "Config key to sweep (overrides the file's sweep)");
    sweep->add_option("--values", values, "Values for --param")->delimiter(',');
    sweep->add_option("--labels", labels, "Column labels for --values")->delimiter(',');

    auto* verify = app.add_subcommand("verify", "Run the acceptance checks and print one line per criterion");
#ifdef MGRITCL_HAVE_ACCEPTANCE
    acceptance::Options verify_opts;
    verify_opts.config_dir = acceptance::default_config_dir();
    verify->add_flag("--quick", verify_opts.quick, "Skip the figure-level and determinism checks");
    verify->add_option("--config-dir", verify_opts.config_dir, "Directory with the figure configs")
        ->check(CLI::ExistingDirectory);
#endif

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return run_solve(solve_opts);
        if (*sweep) return run_sweep(sweep_opts, param, values, labels);
        if (*verify) {
#ifdef MGRITCL_HAVE_ACCEPTANCE
            return acceptance::run_all(std::cout, verify_opts) ? 0 : 1;
#else
            std::cerr << "built without the acceptance suite\n";
            return 2;
#endif
        }
    } catch (const mgritcl::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
