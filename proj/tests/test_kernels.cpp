// Scalar vs SIMD kernel equivalence.
//
// Element-wise kernels and amax are promised bitwise-identical between
// backends; accumulating reductions agree to rounding.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "rml/simd/kernels.hpp"

using namespace rml;

namespace {

std::vector<double> random_vec(std::size_t n, std::mt19937_64& rng,
                               double lo = -10.0, double hi = 10.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(n);
    for (double& x : v)
        x = d(rng);
    return v;
}

bool have_avx2() { return simd::set_active("avx2"); }

} // namespace

TEST_CASE("elementwise kernels agree bitwise across backends") {
    if (!have_avx2()) {
        MESSAGE("AVX2 not available; dispatch test skipped");
        return;
    }
    const auto& sk = simd::scalar_kernels();
    const auto& vk = simd::avx2_kernels();
    std::mt19937_64 rng(42);

    for (std::size_t n : {1u, 3u, 4u, 17u, 129u, 1000u}) {
        auto x = random_vec(n, rng);
        auto y0 = random_vec(n, rng);

        auto ya = y0, yb = y0;
        sk.axpy(ya.data(), 1.7, x.data(), n);
        vk.axpy(yb.data(), 1.7, x.data(), n);
        CHECK(ya == yb);

        ya = y0;
        yb = y0;
        sk.xpby(ya.data(), x.data(), -0.3, n);
        vk.xpby(yb.data(), x.data(), -0.3, n);
        CHECK(ya == yb);

        CHECK(sk.amax(x.data(), n) == vk.amax(x.data(), n));
    }
}

TEST_CASE("grid kernels agree bitwise across backends") {
    if (!have_avx2())
        return;
    const auto& sk = simd::scalar_kernels();
    const auto& vk = simd::avx2_kernels();
    std::mt19937_64 rng(7);

    for (auto [rows, cols] : {std::pair{5, 5}, {9, 13}, {33, 17}, {40, 67}}) {
        const std::size_t n = static_cast<std::size_t>(rows) * cols;
        auto u = random_vec(n, rng);
        auto c = random_vec(n, rng, 0.0, 5.0);
        std::vector<double> oa(n, -1.0), ob(n, -1.0);
        const double inv_h2 = 1024.0;

        sk.laplacian5(oa.data(), u.data(), rows, cols, inv_h2);
        vk.laplacian5(ob.data(), u.data(), rows, cols, inv_h2);
        CHECK(oa == ob);

        sk.laplacian5_plus_diag(oa.data(), u.data(), c.data(), rows, cols, inv_h2);
        vk.laplacian5_plus_diag(ob.data(), u.data(), c.data(), rows, cols, inv_h2);
        CHECK(oa == ob);

        auto ua = u, ub = u;
        sk.jacobi_update(ua.data(), oa.data(), c.data(), 0.8, rows, cols, inv_h2);
        vk.jacobi_update(ub.data(), ob.data(), c.data(), 0.8, rows, cols, inv_h2);
        CHECK(ua == ub);
    }
}

TEST_CASE("reductions agree to rounding across backends") {
    if (!have_avx2())
        return;
    const auto& sk = simd::scalar_kernels();
    const auto& vk = simd::avx2_kernels();
    std::mt19937_64 rng(3);

    for (std::size_t n : {2u, 5u, 64u, 1001u, 100000u}) {
        auto x = random_vec(n, rng);
        auto y = random_vec(n, rng);
        const double tol = 1e-13 * static_cast<double>(n);

        CHECK(sk.dot(x.data(), y.data(), n) ==
              doctest::Approx(vk.dot(x.data(), y.data(), n)).epsilon(tol));
        CHECK(sk.sum(x.data(), n) ==
              doctest::Approx(vk.sum(x.data(), n)).epsilon(tol));
        CHECK(sk.asum(x.data(), n) ==
              doctest::Approx(vk.asum(x.data(), n)).epsilon(tol));
    }
}

TEST_CASE("scalar reference values") {
    const auto& sk = simd::scalar_kernels();
    std::vector<double> x{1.0, -2.0, 3.0};
    std::vector<double> y{0.5, 0.5, 0.5};
    CHECK(sk.dot(x.data(), y.data(), 3) == doctest::Approx(1.0));
    CHECK(sk.asum(x.data(), 3) == doctest::Approx(6.0));
    CHECK(sk.amax(x.data(), 3) == doctest::Approx(3.0));
    CHECK(sk.sum(x.data(), 3) == doctest::Approx(2.0));

    // 5-point stencil of the parabola x^2+y^2 gives -4 * inv_h2 * h^2 = const
    const int rows = 7, cols = 7;
    std::vector<double> u(rows * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            u[i * cols + j] = i * i + j * j;
    std::vector<double> out(rows * cols);
    sk.laplacian5(out.data(), u.data(), rows, cols, 2.0);
    for (int i = 1; i < rows - 1; ++i)
        for (int j = 1; j < cols - 1; ++j)
            CHECK(out[i * cols + j] == doctest::Approx(-8.0));
    CHECK(out[0] == 0.0);
}

TEST_CASE("backend override") {
    CHECK(simd::set_active("scalar"));
    CHECK(std::string(simd::active().name) == "scalar");
    CHECK_FALSE(simd::set_active("neon"));
}
