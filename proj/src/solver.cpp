#include "lvc/solver.hpp"

#include <cmath>
#include <string>

#include "lvc/kernels.hpp"

namespace lvc {

namespace {

bool all_zero(const std::vector<double>& v) {
    for (double x : v)
        if (x != 0.0) return false;
    return true;
}

double rel_residual(const StencilOperator& A, double shift, const std::vector<double>& x,
                    const std::vector<double>& b, double bnorm, std::vector<double>& scratch) {
    const auto& k = kernels::ops();
    A.apply(shift, x.data(), scratch.data());
    k.axpy(-1.0, b.data(), scratch.data(), scratch.size());  // scratch = Mx - b
    return std::sqrt(k.dot(scratch.data(), scratch.data(), scratch.size())) / bnorm;
}

SolveResult solve_tridiagonal(const StencilOperator& A, double shift, const std::vector<double>& b) {
    const std::size_t n = A.size();
    // Thomas elimination on (shift + diag, -face_x). The matrix is an SPD
    // M-matrix, so no pivoting is needed.
    std::vector<double> c(n, 0.0);  // modified super-diagonal
    std::vector<double> d(n);       // modified rhs
    double denom = shift + A.diag[0];
    if (n > 1) c[0] = -A.face_x[0] / denom;
    d[0] = b[0] / denom;
    for (std::size_t i = 1; i < n; ++i) {
        const double sub = -A.face_x[i - 1];
        denom = (shift + A.diag[i]) - sub * c[i - 1];
        if (i < n - 1) c[i] = -A.face_x[i] / denom;
        d[i] = (b[i] - sub * d[i - 1]) / denom;
    }
    std::vector<double> x(n);
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];

    std::vector<double> scratch(n);
    const double bnorm = std::sqrt(kernels::ops().dot(b.data(), b.data(), n));
    SolveReport rep;
    rep.method = SolveMethod::TridiagonalDirect;
    rep.iterations = 0;
    rep.final_relative_residual = rel_residual(A, shift, x, b, bnorm, scratch);
    return {std::move(x), rep};
}

SolveResult solve_pcg(const StencilOperator& A, double shift, const std::vector<double>& b,
                      const std::vector<double>* warm_start, double tol, int max_iterations) {
    const auto& k = kernels::ops();
    const std::size_t n = A.size();
    const double bnorm = std::sqrt(k.dot(b.data(), b.data(), n));

    std::vector<double> inv_diag(n);
    for (std::size_t i = 0; i < n; ++i) inv_diag[i] = 1.0 / (shift + A.diag[i]);

    std::vector<double> x = warm_start ? *warm_start : std::vector<double>(n, 0.0);
    std::vector<double> r(n), z(n), p(n), q(n);

    A.apply(shift, x.data(), r.data());
    k.axpbyz(1.0, b.data(), -1.0, r.data(), r.data(), n);  // r = b - Mx

    k.hadamard(r.data(), inv_diag.data(), z.data(), n);
    p = z;
    double rz = k.dot(r.data(), z.data(), n);

    SolveReport rep;
    rep.method = SolveMethod::IterativeSpd;
    int it = 0;
    while (it < max_iterations) {
        const double rnorm = std::sqrt(k.dot(r.data(), r.data(), n));
        if (rnorm <= tol * bnorm) {
            // the recurrence residual met the target; confirm with the true one
            std::vector<double> scratch(n);
            const double true_rel = rel_residual(A, shift, x, b, bnorm, scratch);
            if (true_rel <= tol) {
                rep.iterations = it;
                rep.final_relative_residual = true_rel;
                return {std::move(x), rep};
            }
            // drift between recurrence and true residual: restart from x
            A.apply(shift, x.data(), r.data());
            k.axpbyz(1.0, b.data(), -1.0, r.data(), r.data(), n);
            k.hadamard(r.data(), inv_diag.data(), z.data(), n);
            p = z;
            rz = k.dot(r.data(), z.data(), n);
        }
        A.apply(shift, p.data(), q.data());
        const double pq = k.dot(p.data(), q.data(), n);
        const double alpha = rz / pq;
        k.axpy(alpha, p.data(), x.data(), n);
        k.axpy(-alpha, q.data(), r.data(), n);
        k.hadamard(r.data(), inv_diag.data(), z.data(), n);
        const double rz_next = k.dot(r.data(), z.data(), n);
        k.xpby(z.data(), rz_next / rz, p.data(), n);
        rz = rz_next;
        ++it;
    }

    std::vector<double> scratch(n);
    rep.iterations = it;
    rep.final_relative_residual = rel_residual(A, shift, x, b, bnorm, scratch);
    if (rep.final_relative_residual <= tol) return {std::move(x), rep};
    throw SolveError("pcg did not reach tol=" + std::to_string(tol) + " within " +
                         std::to_string(max_iterations) + " iterations (residual " +
                         std::to_string(rep.final_relative_residual) + ")",
                     rep);
}

}  // namespace

SolveResult solve_spd(const StencilOperator& A, double diag_shift, const std::vector<double>& rhs,
                      const std::vector<double>* warm_start, const SolveOptions& opts) {
    const std::size_t n = A.size();
    if (rhs.size() != n) throw std::invalid_argument("rhs length does not match operator size");
    if (!(opts.tol > 0.0)) throw std::invalid_argument("solver tolerance must be positive");
    if (!(diag_shift > 0.0)) throw std::invalid_argument("diagonal shift must be positive");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(diag_shift + A.diag[i] > 0.0))
            throw std::invalid_argument("system diagonal must be strictly positive");
    }

    if (all_zero(rhs)) {
        SolveReport rep;
        rep.method = (A.ny == 1 && opts.method != SolveMethod::IterativeSpd)
                         ? SolveMethod::TridiagonalDirect
                         : SolveMethod::IterativeSpd;
        return {std::vector<double>(n, 0.0), rep};
    }

    SolveMethod method = opts.method;
    if (method == SolveMethod::Auto)
        method = A.ny == 1 ? SolveMethod::TridiagonalDirect : SolveMethod::IterativeSpd;
    if (method == SolveMethod::TridiagonalDirect && A.ny != 1)
        throw std::invalid_argument("direct tridiagonal path requires a 1D operator");

    if (method == SolveMethod::TridiagonalDirect) return solve_tridiagonal(A, diag_shift, rhs);

    const int max_iterations = opts.max_iterations > 0 ? opts.max_iterations : 10 * static_cast<int>(n);
    return solve_pcg(A, diag_shift, rhs, warm_start, opts.tol, max_iterations);
}

}  // namespace lvc
