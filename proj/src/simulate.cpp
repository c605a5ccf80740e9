#include "lvc/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lvc/kernels.hpp"

namespace lvc {

FieldState make_constant_state(const Grid& grid, const std::vector<double>& u0, double tau) {
    FieldState s;
    s.step = 0;
    s.tau = tau;
    s.u.reserve(u0.size());
    for (double v : u0) s.u.emplace_back(grid.cell_count(), v);
    return s;
}

FieldState step(const ModelParams& params, const Grid& grid,
                const std::vector<StencilOperator>& operators, const FieldState& state,
                const SolveOptions& solve) {
    const int m = params.species_count;
    if (state.species_count() != m) throw std::invalid_argument("state species count does not match model");
    if (static_cast<int>(operators.size()) != m)
        throw std::invalid_argument("operator count does not match model");
    if (!(state.tau > 0.0)) throw std::invalid_argument("time step must be positive");

    const std::size_t n = grid.cell_count();
    const double vol = grid.cell_volume();
    const double vol_over_tau = vol / state.tau;
    const auto& k = kernels::ops();

    // reaction at the previous layer, all species at once
    std::vector<std::vector<double>> f(m, std::vector<double>(n));
    std::vector<const double*> u_ptrs(m);
    std::vector<double*> f_ptrs(m);
    for (int s = 0; s < m; ++s) {
        u_ptrs[s] = state.u[s].data();
        f_ptrs[s] = f[s].data();
    }
    k.reaction_field(u_ptrs.data(), f_ptrs.data(), params.growth.data(), params.competition.data(),
                     m, n);

    FieldState next;
    next.step = state.step + 1;
    next.tau = state.tau;
    next.u.resize(m);
    std::vector<double> rhs(n);
    for (int s = 0; s < m; ++s) {
        k.axpbyz(vol_over_tau, state.u[s].data(), vol, f[s].data(), rhs.data(), n);
        SolveResult solved = solve_spd(operators[s], vol_over_tau, rhs, &state.u[s], solve);
        next.u[s] = std::move(solved.x);
    }
    return next;
}

std::vector<double> average_solution(const Grid& grid, const FieldState& state) {
    const std::size_t n = grid.cell_count();
    std::vector<double> avg(state.u.size());
    for (std::size_t s = 0; s < state.u.size(); ++s)
        avg[s] = kernels::ops().sum(state.u[s].data(), n) / static_cast<double>(n);
    return avg;
}

std::string classify_survival(const std::vector<double>& final_averages, double theta) {
    if (!(theta > 0.0)) throw std::invalid_argument("survival threshold must be positive");
    std::string code;
    code.reserve(final_averages.size());
    for (double a : final_averages) code.push_back(a >= theta ? '1' : '0');
    return code;
}

SimulationResult run_to_equilibrium(const ModelParams& params, const Grid& grid,
                                    const FieldState& initial, const RunOptions& opts) {
    if (!(opts.eps_stop > 0.0)) throw std::invalid_argument("eps_stop must be positive");
    if (opts.max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");

    std::vector<StencilOperator> operators;
    operators.reserve(params.species_count);
    for (int s = 0; s < params.species_count; ++s)
        operators.push_back(assemble_operator(grid, params.diffusion[s]));

    SimulationResult result;
    FieldState state = initial;
    state.tau = opts.tau;
    std::vector<double> prev_avg = average_solution(grid, state);
    result.average_trajectory.push_back(prev_avg);

    for (long n = 1; n <= opts.max_steps; ++n) {
        try {
            state = step(params, grid, operators, state, opts.solve);
        } catch (const SolveError& e) {
            result.solver_failed = true;
            result.error = e.what();
            result.steps_to_equilibrium = n - 1;
            break;
        }
        std::vector<double> avg = average_solution(grid, state);
        result.average_trajectory.push_back(avg);
        double max_change = 0.0;
        for (std::size_t s = 0; s < avg.size(); ++s)
            max_change = std::max(max_change, std::fabs(avg[s] - prev_avg[s]));
        prev_avg = std::move(avg);
        if (max_change < opts.eps_stop) {
            result.converged = true;
            result.steps_to_equilibrium = n;
            break;
        }
    }
    if (!result.converged && !result.solver_failed) result.steps_to_equilibrium = opts.max_steps;

    result.final_state = std::move(state);
    result.survival_code = classify_survival(prev_avg, opts.theta);
    return result;
}

}  // namespace lvc
