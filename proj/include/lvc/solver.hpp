#pragma once

#include <stdexcept>
#include <vector>

#include "lvc/grid.hpp"

namespace lvc {

enum class SolveMethod {
    Auto,               ///< direct in 1D, iterative in 2D
    TridiagonalDirect,  ///< Thomas elimination (1D operators only)
    IterativeSpd        ///< conjugate gradients, Jacobi preconditioner
};

struct SolveOptions {
    double tol = 1e-10;       ///< relative residual target, ||Mx-b|| / ||b||
    int max_iterations = 0;   ///< 0 means 10*N
    SolveMethod method = SolveMethod::Auto;
};

struct SolveReport {
    int iterations = 0;
    double final_relative_residual = 0.0;
    SolveMethod method = SolveMethod::Auto;
};

/// Thrown when the iterative solver fails to meet the tolerance.
class SolveError : public std::runtime_error {
  public:
    SolveError(const std::string& what, SolveReport rep) : std::runtime_error(what), report(rep) {}
    SolveReport report;
};

struct SolveResult {
    std::vector<double> x;
    SolveReport report;
};

/// Solves (diag_shift*I + A) x = rhs for the SPD system arising at each
/// semi-implicit step (diag_shift = |K|/tau > 0). `warm_start` seeds the
/// iterative path; pass nullptr for a zero initial guess. rhs = 0 returns
/// x = 0 immediately.
SolveResult solve_spd(const StencilOperator& A, double diag_shift, const std::vector<double>& rhs,
                      const std::vector<double>* warm_start = nullptr, const SolveOptions& opts = {});

}  // namespace lvc
