#pragma once

#include <string>
#include <vector>

#include "lvc/grid.hpp"
#include "lvc/model.hpp"
#include "lvc/solver.hpp"

namespace lvc {

/// Cell-average populations of all species at one time level, SoA layout.
struct FieldState {
    long step = 0;   ///< time level n (t = step * tau)
    double tau = 1.0;
    std::vector<std::vector<double>> u;  ///< [species][cell]

    int species_count() const { return static_cast<int>(u.size()); }
};

/// Spatially constant initial state, one value per species.
FieldState make_constant_state(const Grid& grid, const std::vector<double>& u0, double tau);

struct RunOptions {
    double tau = 1.0;
    double eps_stop = 1e-5;   ///< per-step change of every domain average
    long max_steps = 200000;
    double theta = 0.01;      ///< survival threshold on the final domain average
    SolveOptions solve;
};

struct SimulationResult {
    std::vector<std::vector<double>> average_trajectory;  ///< (steps+1) rows of M averages
    FieldState final_state;
    long steps_to_equilibrium = 0;  ///< max_steps when not converged
    bool converged = false;
    std::string survival_code;     ///< bit per species, species 1 first
    bool solver_failed = false;
    std::string error;
};

/// One semi-implicit step: reaction explicit at the previous layer, diffusion
/// implicit, species decoupled. For each species k solves
///   (|K|/tau * I + A_k) u_k = |K|/tau * u_k_old + |K| * f_k(u_old).
FieldState step(const ModelParams& params, const Grid& grid,
                const std::vector<StencilOperator>& operators, const FieldState& state,
                const SolveOptions& solve = {});

/// Volume-weighted domain average per species (arithmetic mean on the uniform grid).
std::vector<double> average_solution(const Grid& grid, const FieldState& state);

/// bit k = 1 iff the final average of species k is >= theta; species 1 first.
std::string classify_survival(const std::vector<double>& final_averages, double theta);

/// Steps until every per-species domain average changes by less than eps_stop
/// in one step, or max_steps. Records the averages at every step. A solver
/// failure ends the run early with the partial trajectory attached.
SimulationResult run_to_equilibrium(const ModelParams& params, const Grid& grid,
                                    const FieldState& initial, const RunOptions& opts);

}  // namespace lvc
