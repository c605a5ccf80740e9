#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lvc/grid.hpp"
#include "lvc/model.hpp"
#include "lvc/presets.hpp"
#include "lvc/simulate.hpp"

namespace lvc {

enum class SweepMode {
    RandomDiffusion,  ///< D_k drawn, everything else held at the base case
    RandomIc,         ///< u0_k drawn, all model parameters held
    FullRandom        ///< r, D, alpha and u0 all drawn
};

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

struct SweepBounds {
    Interval rate{0.01, 0.1};  ///< r, D and alpha draws
    Interval ic{0.01, 0.99};   ///< initial condition draws
};

struct SweepSpec {
    SweepMode mode = SweepMode::FullRandom;
    ModelParams base_params;          ///< fixed entries for held-constant modes
    std::vector<double> base_u0;      ///< held IC (defaults to 0.5 per species)
    SweepBounds bounds;
    DiffusionScale diffusion_scale = DiffusionScale::Regular;
    int run_count = 1;
    std::uint64_t seed = 0;
    Scenario scenario;
    RunOptions run;

    int species_count() const { return base_params.species_count; }
};

/// Per-run result row. `parameters` is the flat name -> value map of all
/// effective model inputs (eps_k, r_k, alpha_kl, u0_k), sampled or held.
struct SweepRecord {
    int run_index = 0;
    std::vector<std::pair<std::string, double>> parameters;
    std::vector<double> initial_averages;
    std::vector<double> final_averages;
    std::string survival_code;
    long steps_to_equilibrium = 0;
    bool converged = false;

    double parameter(const std::string& name) const;  ///< throws on unknown name
};

/// Draws the free parameters of run `run_index` from its own substream.
/// Draw order is fixed (r, D, alpha row-major, u0) so records are
/// reproducible and independent of execution order.
std::pair<ModelParams, std::vector<double>> sample_params(const SweepSpec& spec, int run_index);

/// Runs the whole sweep; runs are independent and may execute on
/// `workers` threads (0 = hardware concurrency). Record content does not
/// depend on the worker count. Individual run failures are recorded with
/// converged = false and never abort the sweep.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, int workers = 0);

struct SurvivalSummary {
    long total_runs = 0;
    long converged_runs = 0;
    long nonconverged_runs = 0;  ///< excluded from the percentages
    std::vector<std::string> codes;  ///< all 2^M codes, ascending binary order
    std::vector<long> counts;
    std::vector<double> percent;     ///< of converged runs
};

SurvivalSummary survival_summary(const std::vector<SweepRecord>& records);

/// Scatter dataset: free-parameter coordinates plus the step count, one row
/// per record, for the steps-to-equilibrium maps.
struct StepsMap {
    std::vector<std::string> columns;        ///< free parameter names + "steps"
    std::vector<std::vector<double>> rows;
};

StepsMap steps_map(const std::vector<SweepRecord>& records, const SweepSpec& spec);

/// Names of the parameters drawn per run in the given mode.
std::vector<std::string> free_parameter_names(const SweepSpec& spec);

}  // namespace lvc
