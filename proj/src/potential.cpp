#include "rml/potential.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace rml {
namespace {

constexpr double inv_two_pi = 1.0 / (2.0 * std::numbers::pi);

// 16-point Gauss-Legendre rule on [-1/2, 1/2]
struct GaussRule {
    std::array<double, 16> x, w;
};

const GaussRule& gauss16() {
    static const GaussRule r = [] {
        // nodes/weights on [-1, 1]
        const double xs[8] = {0.0950125098376374, 0.2816035507792589,
                              0.4580167776572274, 0.6178762444026438,
                              0.7554044083550030, 0.8656312023878318,
                              0.9445750230732326, 0.9894009349916499};
        const double ws[8] = {0.1894506104550685, 0.1826034150449236,
                              0.1691565193950025, 0.1495959888165767,
                              0.1246289712555339, 0.0951585116824928,
                              0.0622535239386479, 0.0271524594117541};
        GaussRule g;
        for (int i = 0; i < 8; ++i) {
            g.x[2 * i] = -0.5 * xs[i];
            g.x[2 * i + 1] = 0.5 * xs[i];
            g.w[2 * i] = 0.5 * ws[i];
            g.w[2 * i + 1] = 0.5 * ws[i];
        }
        return g;
    }();
    return r;
}

// average of log(d/|xi - off|) over the h-cell centered at the origin
double cell_averaged_kernel(double h, double d, Point off) {
    const GaussRule& g = gauss16();
    double s = 0.0;
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            double dx = g.x[a] * h - off.x;
            double dy = g.x[b] * h - off.y;
            double r = std::max(std::hypot(dx, dy), 1e-14 * h);
            s += g.w[a] * g.w[b] * std::log(d / r);
        }
    return s;
}

void add_atom_potential(GridFunction& out, const Atom& atom, double d) {
    const Domain& dom = out.domain();
    const double h = dom.h();
    const double scale = atom.mass * inv_two_pi;
    for (int i = 0; i < dom.rows(); ++i)
        for (int j = 0; j < dom.cols(); ++j) {
            Point p = dom.node(i, j);
            double r = dist(p, atom.location);
            double k;
            if (r < 0.5 * h) {
                k = cell_averaged_kernel(
                    h, d, {atom.location.x - p.x, atom.location.y - p.y});
            } else {
                k = std::log(d / r);
            }
            out.at(i, j) += scale * k;
        }
}

double trapezoid_weight(const Domain& dom, int i, int j) {
    double wi = (i == 0 || i == dom.rows() - 1) ? 0.5 : 1.0;
    double wj = (j == 0 || j == dom.cols() - 1) ? 0.5 : 1.0;
    return wi * wj;
}

// direct quadrature of the diffuse part at one target node
double diffuse_potential_at(const FiniteMeasure& m, int ti, int tj,
                            double self_kernel) {
    const Domain& dom = m.domain();
    const double h = dom.h(), d = dom.d();
    const Point target = dom.node(ti, tj);
    double s = 0.0;
    for (int i = 0; i < dom.rows(); ++i)
        for (int j = 0; j < dom.cols(); ++j) {
            double rho = m.diffuse_at(i, j);
            if (rho == 0.0)
                continue;
            double k;
            if (i == ti && j == tj) {
                k = self_kernel;
            } else {
                k = std::log(d / dist(target, dom.node(i, j)));
            }
            s += trapezoid_weight(dom, i, j) * rho * k;
        }
    return s * h * h * inv_two_pi;
}

} // namespace

double log_kernel(const Point& x, const Point& a, double d) {
    return inv_two_pi * std::log(d / dist(x, a));
}

GridFunction newtonian_potential(const FiniteMeasure& m) {
    const Domain& dom = m.domain();
    GridFunction out(dom);
    for (const Atom& a : m.atoms())
        add_atom_potential(out, a, dom.d());
    if (m.has_diffuse()) {
        const double self_kernel = cell_averaged_kernel(dom.h(), dom.d(), {0, 0});
        for (int i = 0; i < dom.rows(); ++i)
            for (int j = 0; j < dom.cols(); ++j)
                out.at(i, j) += diffuse_potential_at(m, i, j, self_kernel);
    }
    return out;
}

GridFunction newtonian_majorant(const FiniteMeasure& m, const SolverConfig& cfg) {
    const Domain& dom = m.domain();
    // exact trace on the boundary ring
    GridFunction trace(dom);
    const double self_kernel = cell_averaged_kernel(dom.h(), dom.d(), {0, 0});
    auto eval = [&](int i, int j) {
        double v = 0.0;
        for (const Atom& a : m.atoms()) {
            double r = dist(dom.node(i, j), a.location);
            v += a.mass * inv_two_pi * std::log(dom.d() / std::max(r, 0.25 * dom.h()));
        }
        if (m.has_diffuse())
            v += diffuse_potential_at(m, i, j, self_kernel);
        return v;
    };
    for (int j = 0; j < dom.cols(); ++j) {
        trace.at(0, j) = eval(0, j);
        trace.at(dom.rows() - 1, j) = eval(dom.rows() - 1, j);
    }
    for (int i = 1; i < dom.rows() - 1; ++i) {
        trace.at(i, 0) = eval(i, 0);
        trace.at(i, dom.cols() - 1) = eval(i, dom.cols() - 1);
    }
    if (!m.diffuse_only()) {
        // atoms would need a singular interior solve; potential is exact there
        GridFunction direct = newtonian_potential(m);
        return direct;
    }
    return solve_poisson_dirichlet(m, trace, cfg);
}

} // namespace rml
