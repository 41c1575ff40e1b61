#include "rml/linear_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <optional>

#include "rml/simd/kernels.hpp"

namespace rml {
namespace {

using simd::active;

struct Level {
    int rows, cols;
    double inv_h2;
    std::vector<double> c;        // diagonal perturbation; empty = none
    std::vector<double> cz;       // c or zeros, for the jacobi kernel
    std::vector<double> u, b, r;  // work vectors
};

void apply_op(const Level& L, const double* u, double* out) {
    if (L.c.empty())
        active().laplacian5(out, u, L.rows, L.cols, L.inv_h2);
    else
        active().laplacian5_plus_diag(out, u, L.c.data(), L.rows, L.cols, L.inv_h2);
}

void residual(Level& L, const double* u, const double* b, double* r) {
    apply_op(L, u, r);
    const std::size_t n = L.u.size();
    for (std::size_t k = 0; k < n; ++k)
        r[k] = b[k] - r[k];
}

void smooth(Level& L, double* u, const double* b, int steps, double omega) {
    for (int s = 0; s < steps; ++s) {
        residual(L, u, b, L.r.data());
        active().jacobi_update(u, L.r.data(), L.cz.data(), omega, L.rows, L.cols,
                               L.inv_h2);
    }
}

// full weighting onto the coarse grid (coarse node 2i,2j)
void restrict_fw(const Level& fine, const double* rf, Level& coarse, double* rc) {
    const int fc = fine.cols;
    std::memset(rc, 0, sizeof(double) * coarse.u.size());
    for (int i = 1; i < coarse.rows - 1; ++i) {
        for (int j = 1; j < coarse.cols - 1; ++j) {
            const int fi = 2 * i, fj = 2 * j;
            const double* p = rf + fi * fc + fj;
            double v = 4.0 * p[0] + 2.0 * (p[-1] + p[1] + p[-fc] + p[fc]) +
                       (p[-fc - 1] + p[-fc + 1] + p[fc - 1] + p[fc + 1]);
            rc[i * coarse.cols + j] = 0.0625 * v;
        }
    }
}

// bilinear interpolation of the coarse correction, added into fine u
void prolong_add(const Level& coarse, const double* uc, Level& fine, double* uf) {
    const int cc = coarse.cols, fc = fine.cols;
    for (int i = 0; i < coarse.rows - 1; ++i) {
        for (int j = 0; j < coarse.cols - 1; ++j) {
            double c00 = uc[i * cc + j], c01 = uc[i * cc + j + 1];
            double c10 = uc[(i + 1) * cc + j], c11 = uc[(i + 1) * cc + j + 1];
            double* f = uf + (2 * i) * fc + 2 * j;
            f[0] += c00;
            f[1] += 0.5 * (c00 + c01);
            f[fc] += 0.5 * (c00 + c10);
            f[fc + 1] += 0.25 * (c00 + c01 + c10 + c11);
        }
    }
    // top row / right column coincident nodes
    for (int j = 0; j < coarse.cols - 1; ++j) {
        uf[(fine.rows - 1) * fc + 2 * j] += uc[(coarse.rows - 1) * cc + j];
        uf[(fine.rows - 1) * fc + 2 * j + 1] +=
            0.5 * (uc[(coarse.rows - 1) * cc + j] + uc[(coarse.rows - 1) * cc + j + 1]);
    }
    for (int i = 0; i < coarse.rows - 1; ++i) {
        uf[(2 * i) * fc + fc - 1] += uc[i * cc + cc - 1];
        uf[(2 * i + 1) * fc + fc - 1] +=
            0.5 * (uc[i * cc + cc - 1] + uc[(i + 1) * cc + cc - 1]);
    }
    uf[(fine.rows - 1) * fc + fc - 1] += uc[(coarse.rows - 1) * cc + cc - 1];
}

void zero_border(double* v, int rows, int cols) {
    for (int j = 0; j < cols; ++j) {
        v[j] = 0.0;
        v[(rows - 1) * cols + j] = 0.0;
    }
    for (int i = 0; i < rows; ++i) {
        v[i * cols] = 0.0;
        v[i * cols + cols - 1] = 0.0;
    }
}

class Multigrid {
public:
    Multigrid(int rows, int cols, double inv_h2, const std::vector<double>& c,
              int smooth_steps, double omega)
        : smooth_steps_(smooth_steps), omega_(omega) {
        levels_.push_back(make_level(rows, cols, inv_h2, c));
        while (can_coarsen(levels_.back())) {
            const Level& f = levels_.back();
            int crows = (f.rows - 1) / 2 + 1;
            int ccols = (f.cols - 1) / 2 + 1;
            std::vector<double> cc;
            if (!f.c.empty()) {
                Level tmp = make_level(crows, ccols, f.inv_h2 * 0.25, {});
                cc.assign(static_cast<std::size_t>(crows) * ccols, 0.0);
                restrict_fw(f, f.c.data(), tmp, cc.data());
            }
            levels_.push_back(make_level(crows, ccols, f.inv_h2 * 0.25, cc));
        }
    }

    // z = V-cycle applied to rhs
    void apply(const double* rhs, double* z) {
        Level& top = levels_[0];
        std::copy(rhs, rhs + top.u.size(), top.b.begin());
        zero_border(top.b.data(), top.rows, top.cols);
        vcycle(0);
        std::copy(top.u.begin(), top.u.end(), z);
    }

private:
    static Level make_level(int rows, int cols, double inv_h2,
                            std::vector<double> c) {
        Level L;
        L.rows = rows;
        L.cols = cols;
        L.inv_h2 = inv_h2;
        L.c = std::move(c);
        const std::size_t n = static_cast<std::size_t>(rows) * cols;
        L.cz = L.c.empty() ? std::vector<double>(n, 0.0) : L.c;
        L.u.assign(n, 0.0);
        L.b.assign(n, 0.0);
        L.r.assign(n, 0.0);
        return L;
    }

    static bool can_coarsen(const Level& L) {
        return (L.rows - 1) % 2 == 0 && (L.cols - 1) % 2 == 0 &&
               (L.rows - 1) / 2 >= 4 && (L.cols - 1) / 2 >= 4;
    }

    void vcycle(std::size_t l) {
        Level& L = levels_[l];
        std::fill(L.u.begin(), L.u.end(), 0.0);
        if (l + 1 == levels_.size()) {
            smooth(L, L.u.data(), L.b.data(), 60, omega_);
            return;
        }
        smooth(L, L.u.data(), L.b.data(), smooth_steps_, omega_);
        residual(L, L.u.data(), L.b.data(), L.r.data());
        Level& C = levels_[l + 1];
        restrict_fw(L, L.r.data(), C, C.b.data());
        zero_border(C.b.data(), C.rows, C.cols);
        vcycle(l + 1);
        prolong_add(C, C.u.data(), L, L.u.data());
        zero_border(L.u.data(), L.rows, L.cols);
        smooth(L, L.u.data(), L.b.data(), smooth_steps_, omega_);
    }

    std::vector<Level> levels_;
    int smooth_steps_;
    double omega_;
};

} // namespace

int solve_spd(int rows, int cols, double inv_h2, const std::vector<double>& c,
              const std::vector<double>& b, std::vector<double>& x,
              const LinearSolveOptions& opts) {
    const std::size_t n = static_cast<std::size_t>(rows) * cols;
    if (b.size() != n)
        throw std::invalid_argument("solve_spd: rhs size mismatch");
    if (!c.empty() && c.size() != n)
        throw std::invalid_argument("solve_spd: diag size mismatch");
    if (x.size() != n)
        x.assign(n, 0.0);
    zero_border(x.data(), rows, cols);

    const auto& K = active();
    std::vector<double> bb = b;
    zero_border(bb.data(), rows, cols);

    const double bnorm = std::sqrt(K.dot(bb.data(), bb.data(), n));
    if (bnorm == 0.0) {
        std::fill(x.begin(), x.end(), 0.0);
        return 0;
    }
    const double target = opts.tol_rel * bnorm;

    Level top;
    top.rows = rows;
    top.cols = cols;
    top.inv_h2 = inv_h2;
    top.c = c;
    top.u.assign(n, 0.0);
    top.b.assign(n, 0.0);
    top.r.assign(n, 0.0);

    std::vector<double> r(n), z(n), p(n), q(n);
    apply_op(top, x.data(), q.data());
    for (std::size_t k = 0; k < n; ++k)
        r[k] = bb[k] - q[k];
    zero_border(r.data(), rows, cols);

    std::optional<Multigrid> mg;
    if (opts.precond == LinearSolveOptions::Precond::Multigrid)
        mg.emplace(rows, cols, inv_h2, c, opts.smooth_steps, opts.jacobi_omega);

    auto precond = [&](const double* rr, double* zz) {
        if (mg) {
            mg->apply(rr, zz);
        } else {
            const double d0 = 4.0 * inv_h2;
            if (c.empty()) {
                for (std::size_t k = 0; k < n; ++k)
                    zz[k] = rr[k] / d0;
            } else {
                for (std::size_t k = 0; k < n; ++k)
                    zz[k] = rr[k] / (d0 + c[k]);
            }
            zero_border(zz, rows, cols);
        }
    };

    precond(r.data(), z.data());
    std::copy(z.begin(), z.end(), p.begin());
    double rz = K.dot(r.data(), z.data(), n);

    for (int it = 1; it <= opts.max_iter; ++it) {
        apply_op(top, p.data(), q.data());
        double pq = K.dot(p.data(), q.data(), n);
        if (!(pq > 0.0))
            throw LinearSolveError("solve_spd: operator lost positive definiteness");
        double alpha = rz / pq;
        K.axpy(x.data(), alpha, p.data(), n);
        K.axpy(r.data(), -alpha, q.data(), n);
        double rn = std::sqrt(K.dot(r.data(), r.data(), n));
        if (rn <= target) {
            zero_border(x.data(), rows, cols);
            return it;
        }
        precond(r.data(), z.data());
        double rz_new = K.dot(r.data(), z.data(), n);
        double beta = rz_new / rz;
        rz = rz_new;
        K.xpby(p.data(), z.data(), beta, n);
    }
    throw LinearSolveError("solve_spd: CG did not reach tolerance");
}

} // namespace rml
