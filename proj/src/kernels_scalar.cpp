#include "lvc/kernels.hpp"

namespace lvc::kernels {

namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void xpby_scalar(const double* x, double b, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + b * y[i];
}

void axpbyz_scalar(double a, const double* x, double b, const double* y, double* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) z[i] = a * x[i] + b * y[i];
}

void hadamard_scalar(const double* x, const double* y, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double sum_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

// Neighbor subtraction order is part of the kernel contract: west, east,
// south, north. The AVX2 variant mirrors it exactly.
void stencil_apply_scalar(int nx, int ny, const double* diag, const double* fx, const double* fy,
                          double shift, const double* u, double* y) {
    const int fx_stride = nx - 1;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const std::size_t i = static_cast<std::size_t>(iy) * nx + ix;
            double acc = (shift + diag[i]) * u[i];
            if (ix > 0) acc -= fx[static_cast<std::size_t>(iy) * fx_stride + ix - 1] * u[i - 1];
            if (ix < nx - 1) acc -= fx[static_cast<std::size_t>(iy) * fx_stride + ix] * u[i + 1];
            if (iy > 0) acc -= fy[static_cast<std::size_t>(iy - 1) * nx + ix] * u[i - nx];
            if (iy < ny - 1) acc -= fy[static_cast<std::size_t>(iy) * nx + ix] * u[i + nx];
            y[i] = acc;
        }
    }
}

void reaction_field_scalar(const double* const* u, double* const* f, const double* r,
                           const double* alpha, int m, std::size_t n) {
    for (int k = 0; k < m; ++k) {
        const double rk = r[k];
        const double* uk = u[k];
        double* fk = f[k];
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (int l = 0; l < m; ++l) {
                if (l != k) s += alpha[static_cast<std::size_t>(k) * m + l] * u[l][i];
            }
            fk[i] = rk * uk[i] * (1.0 - uk[i]) - uk[i] * s;
        }
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops table = {
        "scalar",        axpy_scalar, xpby_scalar,          axpbyz_scalar,
        hadamard_scalar, dot_scalar,  sum_scalar,           stencil_apply_scalar,
        reaction_field_scalar,
    };
    return table;
}

}  // namespace lvc::kernels
