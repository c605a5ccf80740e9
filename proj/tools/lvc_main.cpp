// lvc: spatial multi-species Lotka-Volterra competition simulator.
//
//   lvc run     — one simulation to equilibrium, writes averages/field/summary
//   lvc sweep   — seeded Monte Carlo sweeps (random-diffusion | random-ic | full-random)
//   lvc analyze — correlation + factor analysis from an existing records.csv
//   lvc presets — list the shipped parameter cases

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lvc/config.hpp"
#include "lvc/io.hpp"
#include "lvc/kernels.hpp"
#include "lvc/stats.hpp"

namespace {

struct CliFlags {
    std::string config_file;
    lvc::KeyValues kv;
};

// Every flag funnels into the same key=value map the config-file parser
// consumes, so both sources share one validation path (flags win).
void add_common_options(CLI::App* cmd, CliFlags& flags) {
    cmd->add_option("--config", flags.config_file, "key=value configuration file");
    auto stash = [&flags](const std::string& key) {
        return [&flags, key](const std::string& value) { flags.kv[key] = value; };
    };
    cmd->add_option_function<std::string>("--scenario", stash("scenario"), "1d, 2da or 2db");
    cmd->add_option_function<std::string>("--preset", stash("preset"), "named parameter case");
    cmd->add_option_function<std::string>("--r", stash("r"), "growth rates, comma list");
    cmd->add_option_function<std::string>("--d", stash("d"), "base diffusion D, comma list");
    cmd->add_option_function<std::string>("--alpha", stash("alpha"), "competition matrix, row-major comma list");
    cmd->add_option_function<std::string>("--u0", stash("u0"), "initial value(s), comma list or scalar");
    cmd->add_option_function<std::string>("--grid", stash("grid"), "cells per axis");
    cmd->add_option_function<std::string>("--length", stash("length"), "domain edge length");
    cmd->add_option_function<std::string>("--tau", stash("tau"), "time step");
    cmd->add_option_function<std::string>("--eps-stop", stash("eps_stop"), "equilibrium criterion");
    cmd->add_option_function<std::string>("--theta", stash("theta"), "survival threshold");
    cmd->add_option_function<std::string>("--max-steps", stash("max_steps"), "step limit");
    cmd->add_option_function<std::string>("--diffusion-scale", stash("diffusion_scale"),
                                          "regular (eps=D) or small (eps=D/10)");
    cmd->add_option_function<std::string>("--out", stash("out"), "output directory");
}

lvc::ParsedConfig resolve(const CliFlags& flags) {
    lvc::KeyValues kv;
    if (!flags.config_file.empty()) kv = lvc::read_config_file(flags.config_file);
    for (const auto& [key, value] : flags.kv) kv[key] = value;
    return lvc::parse_config(kv);
}

int default_factor_count(int species, int feature_count) {
    if (species == 2) return 4;
    if (species == 3) return 7;
    return std::min(feature_count, 2 * species);
}

void run_factor_analysis(const std::vector<lvc::SweepRecord>& records, int species, int factors,
                         const std::string& out_dir) {
    const lvc::FeatureMatrix features = lvc::build_features(records, species);
    const std::vector<double> corr = lvc::correlation_matrix(features);
    const int f = factors > 0 ? factors : default_factor_count(species, features.feature_count());
    const lvc::FactorReport report = lvc::extract_factors(corr, features.feature_count(), f);
    const auto labels = lvc::label_factors(report, features.groups);
    lvc::io::write_factor_outputs(report, labels, features, out_dir);

    std::printf("cumulative variance: %.2f%%\n", 100.0 * report.cumulative_variance);
    for (const auto& lf : labels)
        std::printf("factor %d: %s (var %.1f%%)\n", lf.factor, lf.label.c_str(),
                    100.0 * lf.variance_fraction);
}

int cmd_run(const CliFlags& flags) {
    const lvc::ParsedConfig parsed = resolve(flags);
    if (parsed.is_sweep) throw std::invalid_argument("'run' got a sweep configuration (drop 'mode')");
    const lvc::RunConfig& config = parsed.run;

    const lvc::Grid grid = config.scenario.make_grid();
    const lvc::FieldState initial = lvc::make_constant_state(grid, config.u0, config.run.tau);
    const lvc::SimulationResult result =
        lvc::run_to_equilibrium(config.params, grid, initial, config.run);
    lvc::io::write_run_outputs(result, config, grid, parsed.out_dir);

    std::printf("survival=%s steps=%ld converged=%s", result.survival_code.c_str(),
                result.steps_to_equilibrium, result.converged ? "yes" : "no");
    std::printf(" final=[");
    const auto& final_avg = result.average_trajectory.back();
    for (std::size_t k = 0; k < final_avg.size(); ++k)
        std::printf("%s%.6f", k ? ", " : "", final_avg[k]);
    std::printf("]\n");
    std::printf("outputs in %s\n", parsed.out_dir.c_str());
    return result.solver_failed ? 1 : 0;
}

int cmd_sweep(const CliFlags& flags, int threads) {
    const lvc::ParsedConfig parsed = resolve(flags);
    if (!parsed.is_sweep) throw std::invalid_argument("'sweep' needs a mode (--mode)");
    const lvc::SweepSpec& spec = parsed.sweep;

    const std::vector<lvc::SweepRecord> records = lvc::run_sweep(spec, threads);
    const lvc::SurvivalSummary summary = lvc::survival_summary(records);
    lvc::io::write_sweep_outputs(records, summary, spec, parsed.out_dir);

    std::printf("runs=%ld converged=%ld nonconverged=%ld\n", summary.total_runs,
                summary.converged_runs, summary.nonconverged_runs);
    for (std::size_t c = 0; c < summary.codes.size(); ++c)
        std::printf("%s  %6ld  %6.2f%%\n", summary.codes[c].c_str(), summary.counts[c],
                    summary.percent[c]);

    if (parsed.factors > 0)
        run_factor_analysis(records, spec.species_count(), parsed.factors, parsed.out_dir);
    std::printf("outputs in %s\n", parsed.out_dir.c_str());
    return 0;
}

int cmd_analyze(const std::string& records_path, int factors, const std::string& out_dir) {
    const lvc::io::RecordsFile file = lvc::io::read_records_csv(records_path);
    run_factor_analysis(file.records, file.species_count, factors, out_dir);
    std::printf("outputs in %s\n", out_dir.c_str());
    return 0;
}

int cmd_presets() {
    for (const auto& preset : lvc::case_presets()) {
        std::printf("%s  (%s)\n", preset.name.c_str(), preset.description.c_str());
        std::printf("  r     =");
        for (double r : preset.growth) std::printf(" %g", r);
        std::printf("\n  D     =");
        for (double d : preset.base_diffusion) std::printf(" %g", d);
        std::printf("\n  alpha =");
        const int m = static_cast<int>(preset.growth.size());
        for (int k = 0; k < m; ++k) {
            if (k) std::printf("         ");
            for (int l = 0; l < m; ++l)
                std::printf(" %g", preset.competition[static_cast<std::size_t>(k) * m + l]);
            std::printf("\n");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spatial multi-species Lotka-Volterra competition simulator"};
    app.require_subcommand(1);

    CliFlags run_flags;
    CLI::App* run = app.add_subcommand("run", "run one simulation to equilibrium");
    add_common_options(run, run_flags);

    CliFlags sweep_flags;
    int threads = 0;
    CLI::App* sweep = app.add_subcommand("sweep", "run a seeded Monte Carlo sweep");
    add_common_options(sweep, sweep_flags);
    {
        auto stash = [&sweep_flags](const std::string& key) {
            return [&sweep_flags, key](const std::string& value) { sweep_flags.kv[key] = value; };
        };
        sweep->add_option_function<std::string>("--mode", stash("mode"),
                                                "random-diffusion, random-ic or full-random");
        sweep->add_option_function<std::string>("--runs", stash("runs"), "number of runs");
        sweep->add_option_function<std::string>("--seed", stash("seed"), "sweep seed");
        sweep->add_option_function<std::string>("--species", stash("species"),
                                                "species count (full-random without preset)");
        sweep->add_option_function<std::string>("--factors", stash("factors"),
                                                "run factor analysis with this many factors");
        sweep->add_option("--threads", threads, "worker threads (0 = all cores)");
    }

    std::string records_path, analyze_out = "out";
    int analyze_factors = 0;
    CLI::App* analyze = app.add_subcommand("analyze", "factor analysis from records.csv");
    analyze->add_option("--records", records_path, "records.csv from a sweep")->required();
    analyze->add_option("--factors", analyze_factors, "retained factor count (default per species)");
    analyze->add_option("--out", analyze_out, "output directory");

    CLI::App* presets = app.add_subcommand("presets", "list the shipped parameter cases");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_flags);
        if (sweep->parsed()) return cmd_sweep(sweep_flags, threads);
        if (analyze->parsed()) return cmd_analyze(records_path, analyze_factors, analyze_out);
        if (presets->parsed()) return cmd_presets();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
