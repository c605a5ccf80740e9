#include "lvc/sweep.hpp"

#include <stdexcept>
#include <thread>

#include "lvc/rng.hpp"

namespace lvc {

namespace {

std::string species_suffix(int k) { return std::to_string(k + 1); }

std::string alpha_name(int k, int l) {
    return "alpha_" + std::to_string(k + 1) + std::to_string(l + 1);
}

void append_params(std::vector<std::pair<std::string, double>>& out, const ModelParams& p,
                   const std::vector<double>& u0) {
    const int m = p.species_count;
    for (int k = 0; k < m; ++k) out.emplace_back("eps_" + species_suffix(k), p.diffusion[k]);
    for (int k = 0; k < m; ++k) out.emplace_back("r_" + species_suffix(k), p.growth[k]);
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            if (l != k) out.emplace_back(alpha_name(k, l), p.alpha(k, l));
    for (int k = 0; k < m; ++k) out.emplace_back("u0_" + species_suffix(k), u0[k]);
}

SweepRecord run_one(const SweepSpec& spec, const Grid& grid, int run_index) {
    auto [params, u0] = sample_params(spec, run_index);

    SweepRecord rec;
    rec.run_index = run_index;
    append_params(rec.parameters, params, u0);
    rec.initial_averages = u0;

    const FieldState initial = make_constant_state(grid, u0, spec.run.tau);
    const SimulationResult result = run_to_equilibrium(params, grid, initial, spec.run);

    rec.final_averages = result.average_trajectory.back();
    rec.survival_code = result.survival_code;
    rec.steps_to_equilibrium = result.steps_to_equilibrium;
    rec.converged = result.converged && !result.solver_failed;
    return rec;
}

}  // namespace

double SweepRecord::parameter(const std::string& name) const {
    for (const auto& [key, value] : parameters)
        if (key == name) return value;
    throw std::invalid_argument("record has no parameter '" + name + "'");
}

std::pair<ModelParams, std::vector<double>> sample_params(const SweepSpec& spec, int run_index) {
    const int m = spec.base_params.species_count;
    if (m < 1) throw std::invalid_argument("sweep base parameters are empty");
    if (spec.bounds.rate.lo >= spec.bounds.rate.hi || spec.bounds.ic.lo >= spec.bounds.ic.hi)
        throw std::invalid_argument("sweep bounds must have lo < hi");

    CounterRng rng(spec.seed, static_cast<std::uint64_t>(run_index));

    std::vector<double> growth = spec.base_params.growth;
    std::vector<double> alpha = spec.base_params.competition;
    std::vector<double> eps = spec.base_params.diffusion;
    std::vector<double> u0 = spec.base_u0.empty() ? std::vector<double>(m, 0.5) : spec.base_u0;
    if (static_cast<int>(u0.size()) != m)
        throw std::invalid_argument("base initial condition length does not match species count");

    const Interval rate = spec.bounds.rate;
    const Interval ic = spec.bounds.ic;

    // fixed draw order: r, D, alpha (row-major), u0
    if (spec.mode == SweepMode::FullRandom) {
        for (int k = 0; k < m; ++k) growth[k] = rng.uniform_open(rate.lo, rate.hi);
    }
    if (spec.mode == SweepMode::FullRandom || spec.mode == SweepMode::RandomDiffusion) {
        for (int k = 0; k < m; ++k)
            eps[k] = apply_scale(rng.uniform_open(rate.lo, rate.hi), spec.diffusion_scale);
    }
    if (spec.mode == SweepMode::FullRandom) {
        for (int k = 0; k < m; ++k)
            for (int l = 0; l < m; ++l)
                if (l != k) alpha[static_cast<std::size_t>(k) * m + l] = rng.uniform_open(rate.lo, rate.hi);
    }
    if (spec.mode == SweepMode::FullRandom || spec.mode == SweepMode::RandomIc) {
        for (int k = 0; k < m; ++k) u0[k] = rng.uniform_open(ic.lo, ic.hi);
    }

    return {make_params(std::move(growth), std::move(alpha), std::move(eps)), std::move(u0)};
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, int workers) {
    if (spec.run_count < 1) throw std::invalid_argument("run_count must be >= 1");
    const Grid grid = spec.scenario.make_grid();

    int n_workers = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    if (n_workers < 1) n_workers = 1;
    if (n_workers > spec.run_count) n_workers = spec.run_count;

    std::vector<SweepRecord> records(spec.run_count);
    auto work = [&](int first) {
        for (int i = first; i < spec.run_count; i += n_workers) {
            try {
                records[i] = run_one(spec, grid, i);
            } catch (const std::exception&) {
                // never abort the sweep for one bad run
                SweepRecord rec;
                rec.run_index = i;
                rec.converged = false;
                try {
                    auto [params, u0] = sample_params(spec, i);
                    append_params(rec.parameters, params, u0);
                    rec.initial_averages = u0;
                    rec.final_averages = u0;
                    rec.survival_code = std::string(params.species_count, '0');
                } catch (const std::exception&) {
                    rec.survival_code = std::string(spec.base_params.species_count, '0');
                    rec.initial_averages.assign(spec.base_params.species_count, 0.0);
                    rec.final_averages = rec.initial_averages;
                }
                records[i] = std::move(rec);
            }
        }
    };

    if (n_workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    return records;
}

SurvivalSummary survival_summary(const std::vector<SweepRecord>& records) {
    if (records.empty()) throw std::invalid_argument("survival_summary needs at least one record");
    const int m = static_cast<int>(records.front().survival_code.size());

    SurvivalSummary summary;
    summary.total_runs = static_cast<long>(records.size());
    const int n_codes = 1 << m;
    summary.codes.reserve(n_codes);
    for (int c = 0; c < n_codes; ++c) {
        std::string code(m, '0');
        for (int j = 0; j < m; ++j)
            if (c >> (m - 1 - j) & 1) code[j] = '1';
        summary.codes.push_back(std::move(code));
    }
    summary.counts.assign(n_codes, 0);

    for (const auto& rec : records) {
        if (!rec.converged) {
            ++summary.nonconverged_runs;
            continue;
        }
        ++summary.converged_runs;
        int c = 0;
        for (char bit : rec.survival_code) c = (c << 1) | (bit == '1');
        ++summary.counts[c];
    }

    summary.percent.assign(n_codes, 0.0);
    if (summary.converged_runs > 0) {
        for (int c = 0; c < n_codes; ++c)
            summary.percent[c] = 100.0 * static_cast<double>(summary.counts[c]) /
                                 static_cast<double>(summary.converged_runs);
    }
    return summary;
}

std::vector<std::string> free_parameter_names(const SweepSpec& spec) {
    const int m = spec.species_count();
    std::vector<std::string> names;
    auto add = [&](const std::string& prefix) {
        for (int k = 0; k < m; ++k) names.push_back(prefix + species_suffix(k));
    };
    switch (spec.mode) {
        case SweepMode::RandomDiffusion:
            add("eps_");
            break;
        case SweepMode::RandomIc:
            add("u0_");
            break;
        case SweepMode::FullRandom:
            add("eps_");
            add("r_");
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    if (l != k) names.push_back(alpha_name(k, l));
            add("u0_");
            break;
    }
    return names;
}

StepsMap steps_map(const std::vector<SweepRecord>& records, const SweepSpec& spec) {
    if (records.empty()) throw std::invalid_argument("steps_map needs at least one record");
    StepsMap map;
    map.columns = free_parameter_names(spec);
    map.columns.push_back("steps");
    map.rows.reserve(records.size());
    for (const auto& rec : records) {
        std::vector<double> row;
        row.reserve(map.columns.size());
        for (std::size_t c = 0; c + 1 < map.columns.size(); ++c) row.push_back(rec.parameter(map.columns[c]));
        row.push_back(static_cast<double>(rec.steps_to_equilibrium));
        map.rows.push_back(std::move(row));
    }
    return map;
}

}  // namespace lvc
