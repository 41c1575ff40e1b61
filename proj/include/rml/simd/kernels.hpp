#pragma once

// Data-parallel inner-loop kernels used by the grid solvers.
//
// Every kernel exists as a scalar reference implementation and, on x86-64
// with AVX2, as a vectorized variant selected once at startup by CPUID.
// Element-wise kernels (axpy, xpby, laplacian5, laplacian5_plus_diag,
// jacobi_update) and amax evaluate the same IEEE expression per element in
// both variants and agree bitwise; the accumulating reductions (dot, sum,
// asum) use lane accumulators in the SIMD variant and agree only to
// rounding.  tests/test_kernels.cpp pins both contracts.
//
// Grid kernels operate on row-major (rows x cols) node arrays and touch
// interior nodes only; the boundary ring of `out` is written to zero,
// matching the homogeneous Dirichlet convention used throughout.

#include <cstddef>
#include <string_view>

namespace rml::simd {

struct Kernels {
    // y += a * x
    void (*axpy)(double* y, double a, const double* x, std::size_t n);
    // y = x + b * y
    void (*xpby)(double* y, const double* x, double b, std::size_t n);
    double (*dot)(const double* x, const double* y, std::size_t n);
    double (*sum)(const double* x, std::size_t n);
    double (*asum)(const double* x, std::size_t n);
    double (*amax)(const double* x, std::size_t n);
    // out = (4 u_c - u_w - u_e - u_s - u_n) * inv_h2 on interior nodes
    void (*laplacian5)(double* out, const double* u, int rows, int cols,
                       double inv_h2);
    // out = laplacian5(u) + c .* u on interior nodes
    void (*laplacian5_plus_diag)(double* out, const double* u, const double* c,
                                 int rows, int cols, double inv_h2);
    // u += omega * r ./ (4 * inv_h2 + c) on interior nodes
    void (*jacobi_update)(double* u, const double* r, const double* c,
                          double omega, int rows, int cols, double inv_h2);
    const char* name;
};

const Kernels& scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
const Kernels& avx2_kernels();
#endif

// Backend picked at first use: RML_SIMD=scalar|avx2 overrides, otherwise the
// widest variant the CPU supports.
const Kernels& active();
// Force a backend by name ("scalar", "avx2"); false if unavailable.
bool set_active(std::string_view name);

} // namespace rml::simd
