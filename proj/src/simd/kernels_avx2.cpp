// AVX2 kernel variants.  Compiled with -mavx2 (see src/CMakeLists.txt) and
// reached only after the CPUID check in dispatch.cpp.
//
// Element-wise kernels use mul + add (no FMA) with the same per-element
// operation order as the scalar reference, so their results are bitwise
// identical.  Reductions keep 4 lane accumulators and differ from the scalar
// sum by rounding only.

#include "rml/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace rml::simd {
namespace {

void axpy_avx2(double* y, double a, const double* x, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xv = _mm256_loadu_pd(x + i);
        __m256d yv = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(y + i, _mm256_add_pd(yv, _mm256_mul_pd(av, xv)));
    }
    for (; i < n; ++i)
        y[i] = y[i] + a * x[i];
}

void xpby_avx2(double* y, const double* x, double b, std::size_t n) {
    const __m256d bv = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xv = _mm256_loadu_pd(x + i);
        __m256d yv = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(y + i, _mm256_add_pd(xv, _mm256_mul_pd(bv, yv)));
    }
    for (; i < n; ++i)
        y[i] = x[i] + b * y[i];
}

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xv = _mm256_loadu_pd(x + i);
        __m256d yv = _mm256_loadu_pd(y + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(xv, yv));
    }
    double s = hsum(acc);
    for (; i < n; ++i)
        s += x[i] * y[i];
    return s;
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double s = hsum(acc);
    for (; i < n; ++i)
        s += x[i];
    return s;
}

double asum_avx2(const double* x, std::size_t n) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_and_pd(mask, _mm256_loadu_pd(x + i)));
    double s = hsum(acc);
    for (; i < n; ++i)
        s += std::fabs(x[i]);
    return s;
}

double amax_avx2(const double* x, std::size_t n) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_max_pd(acc, _mm256_and_pd(mask, _mm256_loadu_pd(x + i)));
    __m128d lo = _mm_max_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
    double m = _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; i < n; ++i) {
        double a = std::fabs(x[i]);
        if (a > m) m = a;
    }
    return m;
}

void laplacian5_avx2(double* out, const double* u, int rows, int cols,
                     double inv_h2) {
    const __m256d four = _mm256_set1_pd(4.0);
    const __m256d ih2 = _mm256_set1_pd(inv_h2);
    for (int j = 0; j < cols; ++j) {
        out[j] = 0.0;
        out[(rows - 1) * cols + j] = 0.0;
    }
    for (int i = 1; i < rows - 1; ++i) {
        const double* um = u + (i - 1) * cols;
        const double* uc = u + i * cols;
        const double* up = u + (i + 1) * cols;
        double* o = out + i * cols;
        o[0] = 0.0;
        o[cols - 1] = 0.0;
        int j = 1;
        for (; j + 4 <= cols - 1; j += 4) {
            __m256d c = _mm256_loadu_pd(uc + j);
            __m256d w = _mm256_loadu_pd(uc + j - 1);
            __m256d e = _mm256_loadu_pd(uc + j + 1);
            __m256d s = _mm256_loadu_pd(um + j);
            __m256d nn = _mm256_loadu_pd(up + j);
            // same order as scalar: (((4c - w) - e) - s) - n
            __m256d v = _mm256_mul_pd(four, c);
            v = _mm256_sub_pd(v, w);
            v = _mm256_sub_pd(v, e);
            v = _mm256_sub_pd(v, s);
            v = _mm256_sub_pd(v, nn);
            _mm256_storeu_pd(o + j, _mm256_mul_pd(v, ih2));
        }
        for (; j < cols - 1; ++j)
            o[j] = (4.0 * uc[j] - uc[j - 1] - uc[j + 1] - um[j] - up[j]) * inv_h2;
    }
}

void laplacian5_plus_diag_avx2(double* out, const double* u, const double* c,
                               int rows, int cols, double inv_h2) {
    const __m256d four = _mm256_set1_pd(4.0);
    const __m256d ih2 = _mm256_set1_pd(inv_h2);
    for (int j = 0; j < cols; ++j) {
        out[j] = 0.0;
        out[(rows - 1) * cols + j] = 0.0;
    }
    for (int i = 1; i < rows - 1; ++i) {
        const double* um = u + (i - 1) * cols;
        const double* uc = u + i * cols;
        const double* up = u + (i + 1) * cols;
        const double* cc = c + i * cols;
        double* o = out + i * cols;
        o[0] = 0.0;
        o[cols - 1] = 0.0;
        int j = 1;
        for (; j + 4 <= cols - 1; j += 4) {
            __m256d ucv = _mm256_loadu_pd(uc + j);
            __m256d v = _mm256_mul_pd(four, ucv);
            v = _mm256_sub_pd(v, _mm256_loadu_pd(uc + j - 1));
            v = _mm256_sub_pd(v, _mm256_loadu_pd(uc + j + 1));
            v = _mm256_sub_pd(v, _mm256_loadu_pd(um + j));
            v = _mm256_sub_pd(v, _mm256_loadu_pd(up + j));
            v = _mm256_mul_pd(v, ih2);
            __m256d cu = _mm256_mul_pd(_mm256_loadu_pd(cc + j), ucv);
            _mm256_storeu_pd(o + j, _mm256_add_pd(v, cu));
        }
        for (; j < cols - 1; ++j) {
            double lap = (4.0 * uc[j] - uc[j - 1] - uc[j + 1] - um[j] - up[j]) * inv_h2;
            o[j] = lap + cc[j] * uc[j];
        }
    }
}

void jacobi_update_avx2(double* u, const double* r, const double* c,
                        double omega, int rows, int cols, double inv_h2) {
    const double d0 = 4.0 * inv_h2;
    const __m256d d0v = _mm256_set1_pd(d0);
    const __m256d ov = _mm256_set1_pd(omega);
    for (int i = 1; i < rows - 1; ++i) {
        double* uc = u + i * cols;
        const double* rc = r + i * cols;
        const double* cc = c + i * cols;
        int j = 1;
        for (; j + 4 <= cols - 1; j += 4) {
            __m256d d = _mm256_add_pd(d0v, _mm256_loadu_pd(cc + j));
            __m256d q = _mm256_div_pd(_mm256_loadu_pd(rc + j), d);
            __m256d uv = _mm256_loadu_pd(uc + j);
            _mm256_storeu_pd(uc + j, _mm256_add_pd(uv, _mm256_mul_pd(ov, q)));
        }
        for (; j < cols - 1; ++j)
            uc[j] = uc[j] + omega * (rc[j] / (d0 + cc[j]));
    }
}

} // namespace

const Kernels& avx2_kernels() {
    static const Kernels k = {
        axpy_avx2,  xpby_avx2,      dot_avx2,
        sum_avx2,   asum_avx2,      amax_avx2,
        laplacian5_avx2, laplacian5_plus_diag_avx2, jacobi_update_avx2,
        "avx2",
    };
    return k;
}

} // namespace rml::simd

#endif // x86-64
