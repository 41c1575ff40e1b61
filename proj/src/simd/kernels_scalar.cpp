#include "rml/simd/kernels.hpp"

#include <cmath>

namespace rml::simd {
namespace {

void axpy_scalar(double* y, double a, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = y[i] + a * x[i];
}

void xpby_scalar(double* y, const double* x, double b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = x[i] + b * y[i];
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += x[i] * y[i];
    return s;
}

double sum_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += x[i];
    return s;
}

double asum_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += std::fabs(x[i]);
    return s;
}

double amax_scalar(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double a = std::fabs(x[i]);
        if (a > m) m = a;
    }
    return m;
}

void laplacian5_scalar(double* out, const double* u, int rows, int cols,
                       double inv_h2) {
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
        for (int j = 1; j < cols - 1; ++j)
            o[j] = (4.0 * uc[j] - uc[j - 1] - uc[j + 1] - um[j] - up[j]) * inv_h2;
    }
}

void laplacian5_plus_diag_scalar(double* out, const double* u, const double* c,
                                 int rows, int cols, double inv_h2) {
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
        for (int j = 1; j < cols - 1; ++j) {
            double lap = (4.0 * uc[j] - uc[j - 1] - uc[j + 1] - um[j] - up[j]) * inv_h2;
            o[j] = lap + cc[j] * uc[j];
        }
    }
}

void jacobi_update_scalar(double* u, const double* r, const double* c,
                          double omega, int rows, int cols, double inv_h2) {
    const double d0 = 4.0 * inv_h2;
    for (int i = 1; i < rows - 1; ++i) {
        double* uc = u + i * cols;
        const double* rc = r + i * cols;
        const double* cc = c + i * cols;
        for (int j = 1; j < cols - 1; ++j)
            uc[j] = uc[j] + omega * (rc[j] / (d0 + cc[j]));
    }
}

} // namespace

const Kernels& scalar_kernels() {
    static const Kernels k = {
        axpy_scalar,  xpby_scalar,      dot_scalar,
        sum_scalar,   asum_scalar,      amax_scalar,
        laplacian5_scalar, laplacian5_plus_diag_scalar, jacobi_update_scalar,
        "scalar",
    };
    return k;
}

} // namespace rml::simd
