// AVX2 variants of the hot-loop kernels. This translation unit is compiled
// with -mavx2 when the compiler supports it; callers go through avx2_ops(),
// which also checks CPU support at runtime. Pointwise kernels keep the exact
// operation order of the scalar reference (no FMA), so lanes are bit-exact.

#include "lvc/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace lvc::kernels {

namespace {

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_add_pd(vy, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void xpby_avx2(const double* x, double b, double* y, std::size_t n) {
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vy = _mm256_mul_pd(vb, _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(x + i), vy));
    }
    for (; i < n; ++i) y[i] = x[i] + b * y[i];
}

void axpbyz_avx2(double a, const double* x, double b, const double* y, double* z, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d t = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(x + i)),
                                        _mm256_mul_pd(vb, _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(z + i, t);
    }
    for (; i < n; ++i) z[i] = a * x[i] + b * y[i];
}

void hadamard_avx2(const double* x, const double* y, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) out[i] = x[i] * y[i];
}

double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    double r = hsum(acc);
    for (; i < n; ++i) r += x[i] * y[i];
    return r;
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double r = hsum(acc);
    for (; i < n; ++i) r += x[i];
    return r;
}

// One cell, identical expression to the scalar kernel.
inline double stencil_cell(int nx, int ny, const double* diag, const double* fx, const double* fy,
                           double shift, const double* u, int ix, int iy) {
    const int fx_stride = nx - 1;
    const std::size_t i = static_cast<std::size_t>(iy) * nx + ix;
    double acc = (shift + diag[i]) * u[i];
    if (ix > 0) acc -= fx[static_cast<std::size_t>(iy) * fx_stride + ix - 1] * u[i - 1];
    if (ix < nx - 1) acc -= fx[static_cast<std::size_t>(iy) * fx_stride + ix] * u[i + 1];
    if (iy > 0) acc -= fy[static_cast<std::size_t>(iy - 1) * nx + ix] * u[i - nx];
    if (iy < ny - 1) acc -= fy[static_cast<std::size_t>(iy) * nx + ix] * u[i + nx];
    return acc;
}

void stencil_apply_avx2(int nx, int ny, const double* diag, const double* fx, const double* fy,
                        double shift, const double* u, double* y) {
    const int fx_stride = nx - 1;
    const __m256d vshift = _mm256_set1_pd(shift);
    for (int iy = 0; iy < ny; ++iy) {
        const std::size_t row = static_cast<std::size_t>(iy) * nx;
        const bool has_south = iy > 0;
        const bool has_north = iy < ny - 1;
        y[row] = stencil_cell(nx, ny, diag, fx, fy, shift, u, 0, iy);
        int ix = 1;
        // interior cells: west/east faces always present
        for (; ix + 4 <= nx - 1; ix += 4) {
            const std::size_t i = row + ix;
            const __m256d vu = _mm256_loadu_pd(u + i);
            __m256d acc = _mm256_mul_pd(_mm256_add_pd(vshift, _mm256_loadu_pd(diag + i)), vu);
            const double* fxrow = fx + static_cast<std::size_t>(iy) * fx_stride;
            acc = _mm256_sub_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(fxrow + ix - 1), _mm256_loadu_pd(u + i - 1)));
            acc = _mm256_sub_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(fxrow + ix), _mm256_loadu_pd(u + i + 1)));
            if (has_south) {
                const double* fys = fy + static_cast<std::size_t>(iy - 1) * nx;
                acc = _mm256_sub_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(fys + ix), _mm256_loadu_pd(u + i - nx)));
            }
            if (has_north) {
                const double* fyn = fy + static_cast<std::size_t>(iy) * nx;
                acc = _mm256_sub_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(fyn + ix), _mm256_loadu_pd(u + i + nx)));
            }
            _mm256_storeu_pd(y + i, acc);
        }
        for (; ix < nx; ++ix) y[row + ix] = stencil_cell(nx, ny, diag, fx, fy, shift, u, ix, iy);
    }
}

void reaction_field_avx2(const double* const* u, double* const* f, const double* r,
                         const double* alpha, int m, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    for (int k = 0; k < m; ++k) {
        const double rk = r[k];
        const __m256d vr = _mm256_set1_pd(rk);
        const double* uk = u[k];
        double* fk = f[k];
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4) {
            __m256d vs = _mm256_setzero_pd();
            for (int l = 0; l < m; ++l) {
                if (l == k) continue;
                const __m256d va = _mm256_set1_pd(alpha[static_cast<std::size_t>(k) * m + l]);
                vs = _mm256_add_pd(vs, _mm256_mul_pd(va, _mm256_loadu_pd(u[l] + i)));
            }
            const __m256d vu = _mm256_loadu_pd(uk + i);
            const __m256d logistic = _mm256_mul_pd(_mm256_mul_pd(vr, vu), _mm256_sub_pd(one, vu));
            _mm256_storeu_pd(fk + i, _mm256_sub_pd(logistic, _mm256_mul_pd(vu, vs)));
        }
        for (; i < n; ++i) {
            double s = 0.0;
            for (int l = 0; l < m; ++l) {
                if (l != k) s += alpha[static_cast<std::size_t>(k) * m + l] * u[l][i];
            }
            fk[i] = rk * uk[i] * (1.0 - uk[i]) - uk[i] * s;
        }
    }
}

}  // namespace

const Ops* avx2_ops() {
#if defined(__x86_64__) || defined(__i386__)
    if (!__builtin_cpu_supports("avx2")) return nullptr;
#endif
    static const Ops table = {
        "avx2",        axpy_avx2, xpby_avx2, axpbyz_avx2,
        hadamard_avx2, dot_avx2,  sum_avx2,  stencil_apply_avx2,
        reaction_field_avx2,
    };
    return &table;
}

}  // namespace lvc::kernels

#else  // !__AVX2__

namespace lvc::kernels {

const Ops* avx2_ops() { return nullptr; }

}  // namespace lvc::kernels

#endif
