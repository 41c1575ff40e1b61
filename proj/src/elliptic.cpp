#include "rml/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "rml/simd/kernels.hpp"

namespace rml {
namespace {

using simd::active;

std::vector<double> interior_rhs(const FiniteMeasure& f, double offset) {
    if (!f.diffuse_only())
        throw std::invalid_argument(
            "solver data must be diffuse-only; mollify atomic measures first");
    const Domain& dom = f.domain();
    std::vector<double> rhs(dom.node_count(), 0.0);
    if (f.has_diffuse())
        rhs = f.diffuse();
    if (offset != 0.0)
        for (double& v : rhs)
            v += offset;
    // boundary ring carries no equation
    for (int j = 0; j < dom.cols(); ++j) {
        rhs[dom.index(0, j)] = 0.0;
        rhs[dom.index(dom.rows() - 1, j)] = 0.0;
    }
    for (int i = 0; i < dom.rows(); ++i) {
        rhs[dom.index(i, 0)] = 0.0;
        rhs[dom.index(i, dom.cols() - 1)] = 0.0;
    }
    return rhs;
}

LinearSolveOptions linear_opts(const SolverConfig& cfg) {
    LinearSolveOptions o;
    o.tol_rel = cfg.linear_solver_tol;
    o.precond = cfg.precond;
    return o;
}

// pointwise nonlinearity with an optional per-node weight; covers the three
// named kinds (weight empty) and the system sweep kind w(x) * (e^t - 1)
struct PointwiseG {
    const Nonlinearity* nl = nullptr;          // named kind
    const std::vector<double>* weight = nullptr;  // system sweep kind
    double cap() const { return nl ? 700.0 / nl->max_growth_rate() : 700.0; }
    double g(std::size_t k, double t) const {
        if (nl)
            return nl->g(t);
        return (*weight)[k] * std::expm1(t);
    }
    double gp(std::size_t k, double t) const {
        if (nl)
            return nl->gprime(t);
        return (*weight)[k] * std::exp(t);
    }
};

void eval_g(const PointwiseG& G, const std::vector<double>& u,
            std::vector<double>& out) {
    out.resize(u.size());
    for (std::size_t k = 0; k < u.size(); ++k)
        out[k] = G.g(k, u[k]);
}

void eval_gp(const PointwiseG& G, const std::vector<double>& u,
             std::vector<double>& out) {
    out.resize(u.size());
    for (std::size_t k = 0; k < u.size(); ++k)
        out[k] = G.gp(k, u[k]);
}

void zero_ring(std::vector<double>& v, int rows, int cols) {
    for (int j = 0; j < cols; ++j) {
        v[j] = 0.0;
        v[static_cast<std::size_t>(rows - 1) * cols + j] = 0.0;
    }
    for (int i = 0; i < rows; ++i) {
        v[static_cast<std::size_t>(i) * cols] = 0.0;
        v[static_cast<std::size_t>(i) * cols + cols - 1] = 0.0;
    }
}

// residual = -Lap u + g(u) - rhs on interior nodes
double nonlinear_residual(const Domain& dom, const PointwiseG& G,
                          const std::vector<double>& u,
                          const std::vector<double>& rhs,
                          std::vector<double>& res,
                          std::vector<double>& gu) {
    const int rows = dom.rows(), cols = dom.cols();
    const double inv_h2 = 1.0 / (dom.h() * dom.h());
    res.resize(u.size());
    active().laplacian5(res.data(), u.data(), rows, cols, inv_h2);
    eval_g(G, u, gu);
    for (int i = 1; i < rows - 1; ++i)
        for (int j = 1; j < cols - 1; ++j) {
            std::size_t k = static_cast<std::size_t>(i) * cols + j;
            res[k] = res[k] + gu[k] - rhs[k];
        }
    zero_ring(res, rows, cols);
    return active().amax(res.data(), res.size());
}

// monotone relaxation from a supersolution (Brezis-Strauss style); returns
// true when the residual target is met
bool monotone_fallback(const Domain& dom, const PointwiseG& G,
                       const std::vector<double>& rhs, std::vector<double>& u,
                       const SolverConfig& cfg) {
    const int rows = dom.rows(), cols = dom.cols();
    const double inv_h2 = 1.0 / (dom.h() * dom.h());
    std::vector<double> res, gu, gp, rlin(u.size()), unew;

    const int max_sweeps = 500;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double rn = nonlinear_residual(dom, G, u, rhs, res, gu);
        if (rn <= cfg.newton_tol)
            return true;
        eval_gp(G, u, gp);
        double lambda = 0.0;
        for (double v : gp)
            lambda = std::max(lambda, v);
        lambda = std::max(lambda, 1.0);
        // (-Lap + lambda) u_next = rhs + lambda u - g(u)
        for (std::size_t k = 0; k < u.size(); ++k)
            rlin[k] = rhs[k] + lambda * u[k] - gu[k];
        zero_ring(rlin, rows, cols);
        unew = u;
        std::vector<double> lam(u.size(), lambda);
        solve_spd(rows, cols, inv_h2, lam, rlin, unew, linear_opts(cfg));
        // ordered iterates; tiny positive drift is rounding
        double worst_up = 0.0;
        for (std::size_t k = 0; k < u.size(); ++k)
            worst_up = std::max(worst_up, unew[k] - u[k]);
        u.swap(unew);
        if (worst_up > 1e-10 && sweep > 0) {
            // lost ordering: not a valid monotone path
            return false;
        }
    }
    return false;
}

GridFunction newton_solve(const Domain& dom, const PointwiseG& G,
                          const std::vector<double>& rhs,
                          const SolverConfig& cfg,
                          const std::vector<double>* warm) {
    const int rows = dom.rows(), cols = dom.cols();
    const double inv_h2 = 1.0 / (dom.h() * dom.h());
    const double cap = G.cap();
    const std::size_t n = static_cast<std::size_t>(rows) * cols;

    std::vector<double> u;
    if (warm) {
        u = *warm;
    } else {
        // Poisson supersolution of the positive source part, clipped to the
        // overflow-safe range
        std::vector<double> fplus(rhs.size());
        for (std::size_t k = 0; k < n; ++k)
            fplus[k] = std::max(rhs[k], 0.0);
        u.assign(n, 0.0);
        solve_spd(rows, cols, inv_h2, {}, fplus, u, linear_opts(cfg));
        for (double& v : u)
            v = std::min(v, cap - 10.0);
    }
    zero_ring(u, rows, cols);

    std::vector<double> res, gu, gp, delta(n, 0.0), trial(n), tres, tgu;
    double rn = nonlinear_residual(dom, G, u, rhs, res, gu);

    for (int it = 0; it < cfg.newton_max_iters; ++it) {
        if (rn <= cfg.newton_tol)
            return {dom, std::move(u)};
        eval_gp(G, u, gp);
        zero_ring(gp, rows, cols);
        for (double& v : res)
            v = -v;
        std::fill(delta.begin(), delta.end(), 0.0);
        solve_spd(rows, cols, inv_h2, gp, res, delta, linear_opts(cfg));

        double t = 1.0;
        bool accepted = false;
        while (t >= cfg.min_step) {
            for (std::size_t k = 0; k < n; ++k)
                trial[k] = u[k] + t * delta[k];
            double m = *std::max_element(trial.begin(), trial.end());
            if (m <= cap) {
                double rt = nonlinear_residual(dom, G, trial, rhs, tres, tgu);
                if (rt < rn) {
                    u.swap(trial);
                    rn = rt;
                    res = tres;
                    gu = tgu;
                    accepted = true;
                    break;
                }
            }
            t *= 0.5;
        }
        if (!accepted)
            break;  // damping exhausted; try the monotone path
        // restore residual sign convention for the next loop head
        // (res currently holds the accepted residual)
    }

    if (rn <= cfg.newton_tol)
        return {dom, std::move(u)};

    // fallback: monotone relaxation from the Poisson supersolution
    std::vector<double> fplus(rhs.size());
    for (std::size_t k = 0; k < n; ++k)
        fplus[k] = std::max(rhs[k], 0.0);
    std::vector<double> us(n, 0.0);
    solve_spd(rows, cols, inv_h2, {}, fplus, us, linear_opts(cfg));
    for (double& v : us)
        v = std::min(v, cap - 10.0);
    if (monotone_fallback(dom, G, rhs, us, cfg))
        return {dom, std::move(us)};

    std::vector<double> r2, g2;
    double rn2 = nonlinear_residual(dom, G, us, rhs, r2, g2);
    GridFunction last(dom, rn2 < rn ? std::move(us) : std::move(u));
    throw SolverError("nonlinear solve stalled at residual " +
                          std::to_string(std::min(rn, rn2)),
                      std::move(last), cfg.newton_max_iters);
}

} // namespace

GridFunction solve_poisson(const FiniteMeasure& f, const SolverConfig& cfg) {
    const Domain& dom = f.domain();
    std::vector<double> rhs = interior_rhs(f, 0.0);
    std::vector<double> u(dom.node_count(), 0.0);
    solve_spd(dom.rows(), dom.cols(), 1.0 / (dom.h() * dom.h()), {}, rhs, u,
              linear_opts(cfg));
    return {dom, std::move(u)};
}

GridFunction solve_poisson_dirichlet(const FiniteMeasure& f,
                                     const GridFunction& boundary_values,
                                     const SolverConfig& cfg) {
    const Domain& dom = f.domain();
    if (!(boundary_values.domain() == dom))
        throw std::invalid_argument("boundary trace lives on a different grid");
    const int rows = dom.rows(), cols = dom.cols();
    const double inv_h2 = 1.0 / (dom.h() * dom.h());
    std::vector<double> rhs = interior_rhs(f, 0.0);
    // fold the boundary trace into the right-hand side of adjacent rows
    auto bv = [&](int i, int j) { return boundary_values(i, j); };
    for (int j = 1; j < cols - 1; ++j) {
        rhs[dom.index(1, j)] += bv(0, j) * inv_h2;
        rhs[dom.index(rows - 2, j)] += bv(rows - 1, j) * inv_h2;
    }
    for (int i = 1; i < rows - 1; ++i) {
        rhs[dom.index(i, 1)] += bv(i, 0) * inv_h2;
        rhs[dom.index(i, cols - 2)] += bv(i, cols - 1) * inv_h2;
    }
    std::vector<double> u(dom.node_count(), 0.0);
    solve_spd(rows, cols, inv_h2, {}, rhs, u, linear_opts(cfg));
    GridFunction out(dom, std::move(u));
    for (int j = 0; j < cols; ++j) {
        out.at(0, j) = bv(0, j);
        out.at(rows - 1, j) = bv(rows - 1, j);
    }
    for (int i = 0; i < rows; ++i) {
        out.at(i, 0) = bv(i, 0);
        out.at(i, cols - 1) = bv(i, cols - 1);
    }
    return out;
}

GridFunction solve_scalar(const FiniteMeasure& f, const Nonlinearity& nl,
                          const SolverConfig& cfg) {
    PointwiseG G;
    G.nl = &nl;
    std::vector<double> rhs = interior_rhs(f, nl.source_offset());
    return newton_solve(f.domain(), G, rhs, cfg, nullptr);
}

GridFunction solve_scalar_weighted(const FiniteMeasure& f,
                                   const std::vector<double>& weight,
                                   const SolverConfig& cfg,
                                   const GridFunction* warm_start) {
    PointwiseG G;
    G.weight = &weight;
    std::vector<double> rhs = interior_rhs(f, 0.0);
    const std::vector<double>* warm =
        warm_start ? &warm_start->values() : nullptr;
    return newton_solve(f.domain(), G, rhs, cfg, warm);
}

SystemSolution solve_system(const FiniteMeasure& fmu, const FiniteMeasure& fnu,
                            const SolverConfig& cfg,
                            const SystemSolution* warm_start) {
    const Domain& dom = fmu.domain();
    if (!(fnu.domain() == dom))
        throw std::invalid_argument("solve_system: domain mismatch");

    SystemSolution s{GridFunction(dom), GridFunction(dom), 0};
    if (warm_start)
        s = *warm_start;

    const std::size_t n = s.u.size();
    std::vector<double> weight(n);
    auto fill_weight = [&](const GridFunction& field) {
        const double* p = field.data();
        for (std::size_t k = 0; k < n; ++k)
            weight[k] = std::exp(std::min(p[k], 300.0));
    };

    for (int sweep = 1; sweep <= cfg.outer_gs_max_iters; ++sweep) {
        GridFunction up = s.u, vp = s.v;
        try {
            fill_weight(s.v);
            s.u = solve_scalar_weighted(fmu, weight, cfg, &s.u);
            fill_weight(s.u);
            s.v = solve_scalar_weighted(fnu, weight, cfg, &s.v);
        } catch (SolverError& e) {
            throw SolverError("system sweep " + std::to_string(sweep) + ": " +
                                  e.what(),
                              std::move(e.last_iterate), sweep);
        }
        s.sweeps = sweep;
        double gap = l1_gap(s.u, up) + l1_gap(s.v, vp);
        if (gap <= cfg.outer_gs_tol)
            return s;
    }
    throw SolverError("system Gauss-Seidel did not converge", std::move(s.u),
                      cfg.outer_gs_max_iters);
}

GridFunction apply_nonlinearity(const GridFunction& u, const Nonlinearity& nl) {
    GridFunction out(u.domain());
    const double* p = u.data();
    double* q = out.data();
    for (std::size_t k = 0; k < u.size(); ++k)
        q[k] = nl.g(p[k]);
    return out;
}

GridFunction discrete_laplacian(const GridFunction& u) {
    const Domain& dom = u.domain();
    GridFunction out(dom);
    active().laplacian5(out.data(), u.data(), dom.rows(), dom.cols(),
                        1.0 / (dom.h() * dom.h()));
    return out;
}

double absorption_l1(const GridFunction& u, const Nonlinearity& nl) {
    const Domain& dom = u.domain();
    double s = 0.0;
    for (int i = 1; i < dom.rows() - 1; ++i)
        for (int j = 1; j < dom.cols() - 1; ++j)
            s += std::fabs(nl.g(u(i, j)));
    return s * dom.h() * dom.h();
}

} // namespace rml
