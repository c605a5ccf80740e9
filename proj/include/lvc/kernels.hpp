#pragma once

#include <cstddef>

namespace lvc::kernels {

/// Hot-loop kernel table. One scalar reference implementation, plus an AVX2
/// variant selected at runtime when the CPU supports it.
///
/// Pointwise kernels (axpy, xpby, axpbyz, hadamard, stencil_apply,
/// reaction_field) are bit-exact across variants: they perform the same
/// floating-point operations in the same order per element (the build
/// disables FP contraction). Reductions (dot, sum) change the summation
/// order under SIMD and agree with scalar only to rounding.
struct Ops {
    const char* name;

    /// y += a*x
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    /// y = x + b*y
    void (*xpby)(const double* x, double b, double* y, std::size_t n);
    /// z = a*x + b*y
    void (*axpbyz)(double a, const double* x, double b, const double* y, double* z, std::size_t n);
    /// out = x .* y
    void (*hadamard)(const double* x, const double* y, double* out, std::size_t n);
    double (*dot)(const double* x, const double* y, std::size_t n);
    double (*sum)(const double* x, std::size_t n);

    /// y = (shift*I + A) u for the structured 3/5-point stencil operator
    /// (diag/fx/fy layout as in StencilOperator; ny == 1 means 1D).
    void (*stencil_apply)(int nx, int ny, const double* diag, const double* fx, const double* fy,
                          double shift, const double* u, double* y);

    /// Reaction term over a whole field, SoA layout: u[k] and f[k] are
    /// arrays of n cells; r has length m, alpha is row-major m x m.
    /// f_k[i] = r_k u_k[i] (1 - u_k[i]) - u_k[i] * sum_{l != k} a_kl u_l[i].
    void (*reaction_field)(const double* const* u, double* const* f, const double* r,
                           const double* alpha, int m, std::size_t n);
};

/// Scalar reference kernels; always available.
const Ops& scalar_ops();

/// AVX2 kernels, or nullptr when the build or the CPU lacks AVX2.
const Ops* avx2_ops();

/// The table picked at startup: AVX2 when available, scalar otherwise.
const Ops& ops();

}  // namespace lvc::kernels
