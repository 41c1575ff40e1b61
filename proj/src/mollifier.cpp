#include "rml/mollifier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rml {
namespace {

double kernel_profile(MollifierShape shape, double r, double eps) {
    if (r >= eps)
        return 0.0;
    double q = r / eps;
    switch (shape) {
    case MollifierShape::CompactBump:
        return std::exp(-1.0 / (1.0 - q * q));
    case MollifierShape::TruncatedGaussian: {
        double sigma = eps / 3.0;
        return std::exp(-0.5 * (r / sigma) * (r / sigma));
    }
    }
    return 0.0;
}

} // namespace

std::vector<double> mollifier_stamp(const MollifierFamily& family, double h,
                                    Point subnode_offset, int& radius_out) {
    if (!(family.epsilon > 0.0))
        throw std::invalid_argument("mollifier width must be positive");
    const int R = static_cast<int>(std::floor(family.epsilon / h)) + 1;
    const int side = 2 * R + 1;
    std::vector<double> k(static_cast<std::size_t>(side) * side, 0.0);
    double s = 0.0;
    for (int di = -R; di <= R; ++di)
        for (int dj = -R; dj <= R; ++dj) {
            double r = std::hypot(dj * h - subnode_offset.x,
                                  di * h - subnode_offset.y);
            double v = kernel_profile(family.shape, r, family.epsilon);
            k[static_cast<std::size_t>(di + R) * side + (dj + R)] = v;
            s += v;
        }
    if (!(s > 0.0))
        throw std::invalid_argument("mollifier width is below grid resolution");
    const double scale = 1.0 / (s * h * h);  // discrete renormalization
    for (double& v : k)
        v *= scale;
    radius_out = R;
    return k;
}

FiniteMeasure mollify(const FiniteMeasure& m, const MollifierFamily& family) {
    const Domain& dom = m.domain();
    const double h = dom.h(), eps = family.epsilon;
    for (const Atom& a : m.atoms())
        if (dom.boundary_distance(a.location) <= eps + 2.0 * h)
            throw std::invalid_argument(
                "atom too close to the boundary for mollifier width " +
                std::to_string(eps));

    std::vector<double> out(dom.node_count(), 0.0);

    for (const Atom& a : m.atoms()) {
        int i0 = static_cast<int>(std::lround((a.location.y - dom.origin().y) / h));
        int j0 = static_cast<int>(std::lround((a.location.x - dom.origin().x) / h));
        Point off{a.location.x - dom.node(i0, j0).x,
                  a.location.y - dom.node(i0, j0).y};
        int R = 0;
        std::vector<double> stamp = mollifier_stamp(family, h, off, R);
        const int side = 2 * R + 1;
        for (int di = -R; di <= R; ++di)
            for (int dj = -R; dj <= R; ++dj) {
                int i = i0 + di, j = j0 + dj;
                double v = stamp[static_cast<std::size_t>(di + R) * side + (dj + R)];
                if (v != 0.0)
                    out[dom.index(i, j)] += a.mass * v;
            }
    }

    if (m.has_diffuse()) {
        int R = 0;
        std::vector<double> stamp = mollifier_stamp(family, h, {0.0, 0.0}, R);
        const int side = 2 * R + 1;
        const double h2 = h * h;
        const std::vector<double>& rho = m.diffuse();
        for (int i = 0; i < dom.rows(); ++i)
            for (int j = 0; j < dom.cols(); ++j) {
                double acc = 0.0;
                for (int di = -R; di <= R; ++di) {
                    int si = i - di;
                    if (si < 0 || si >= dom.rows())
                        continue;
                    for (int dj = -R; dj <= R; ++dj) {
                        int sj = j - dj;
                        if (sj < 0 || sj >= dom.cols())
                            continue;
                        double kv = stamp[static_cast<std::size_t>(di + R) * side + (dj + R)];
                        if (kv != 0.0)
                            acc += kv * rho[dom.index(si, sj)];
                    }
                }
                out[dom.index(i, j)] += acc * h2;
            }
    }

    return {dom, std::move(out), {}};
}

std::vector<TestFunction> default_test_panel(const Domain& dom) {
    const Point o = dom.origin();
    const double W = dom.width(), H = dom.height();
    auto s_of = [o, W](Point p) { return (p.x - o.x) / W; };
    auto t_of = [o, H](Point p) { return (p.y - o.y) / H; };
    auto bubble = [s_of, t_of](Point p) {
        double s = s_of(p), t = t_of(p);
        return 16.0 * s * (1.0 - s) * t * (1.0 - t);
    };
    auto bump_at = [o, W, H](double cs, double ct, double rad) {
        return [o, W, H, cs, ct, rad](Point p) {
            double dx = (p.x - o.x) / W - cs;
            double dy = (p.y - o.y) / H - ct;
            double q2 = (dx * dx + dy * dy) / (rad * rad);
            return q2 < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - q2)) : 0.0;
        };
    };
    const double pi = std::numbers::pi;
    std::vector<TestFunction> panel;
    panel.push_back({"bubble", bubble});
    panel.push_back({"bubble_x", [=](Point p) { return bubble(p) * (2.0 * s_of(p) - 1.0); }});
    panel.push_back({"bubble_y", [=](Point p) { return bubble(p) * (2.0 * t_of(p) - 1.0); }});
    panel.push_back({"bubble_xy", [=](Point p) {
                         return bubble(p) * (2.0 * s_of(p) - 1.0) * (2.0 * t_of(p) - 1.0);
                     }});
    panel.push_back({"sine_11", [=](Point p) {
                         return std::sin(pi * s_of(p)) * std::sin(pi * t_of(p));
                     }});
    panel.push_back({"sine_21", [=](Point p) {
                         return std::sin(2.0 * pi * s_of(p)) * std::sin(pi * t_of(p));
                     }});
    panel.push_back({"sine_12", [=](Point p) {
                         return std::sin(pi * s_of(p)) * std::sin(2.0 * pi * t_of(p));
                     }});
    panel.push_back({"bump_center", bump_at(0.5, 0.5, 0.3)});
    panel.push_back({"bump_offset", bump_at(0.3, 0.7, 0.2)});
    panel.push_back({"bubble_sq", [=](Point p) {
                         double b = bubble(p);
                         return b * b;
                     }});
    return panel;
}

double integrate_against(const FiniteMeasure& m, const TestFunction& zeta) {
    const Domain& dom = m.domain();
    double s = 0.0;
    if (m.has_diffuse()) {
        for (int i = 0; i < dom.rows(); ++i) {
            double wi = (i == 0 || i == dom.rows() - 1) ? 0.5 : 1.0;
            for (int j = 0; j < dom.cols(); ++j) {
                double rho = m.diffuse_at(i, j);
                if (rho == 0.0)
                    continue;
                double wj = (j == 0 || j == dom.cols() - 1) ? 0.5 : 1.0;
                s += wi * wj * rho * zeta.value(dom.node(i, j));
            }
        }
        s *= dom.h() * dom.h();
    }
    for (const Atom& a : m.atoms())
        s += a.mass * zeta.value(a.location);
    return s;
}

double weakstar_gap(const FiniteMeasure& m1, const FiniteMeasure& m2,
                    const std::vector<TestFunction>& panel) {
    if (!(m1.domain() == m2.domain()))
        throw std::invalid_argument("weakstar_gap: domain mismatch");
    double gap = 0.0;
    for (const TestFunction& z : panel)
        gap = std::max(gap,
                       std::fabs(integrate_against(m1, z) - integrate_against(m2, z)));
    return gap;
}

const char* ApproximationSchedule::kind_name(Kind k) {
    switch (k) {
    case Kind::Plain: return "plain";
    case Kind::DiagonalOne: return "diagonal-1";
    case Kind::DiagonalTwo: return "diagonal-2";
    }
    return "?";
}

ApproximationSchedule plain_schedule(const FiniteMeasure& m,
                                     const std::vector<double>& widths,
                                     MollifierShape shape) {
    if (widths.empty())
        throw std::invalid_argument("plain_schedule: empty width list");
    for (std::size_t k = 1; k < widths.size(); ++k)
        if (!(widths[k] < widths[k - 1]))
            throw std::invalid_argument("plain_schedule: widths must strictly decrease");
    if (widths.back() < 4.0 * m.domain().h())
        throw std::invalid_argument(
            "plain_schedule: smallest width must be >= 4h on this grid");

    ApproximationSchedule s{ApproximationSchedule::Kind::Plain,
                            widths,
                            {},
                            {},
                            {},
                            m,
                            std::nullopt};
    for (double eps : widths)
        s.mu_terms.push_back(mollify(m, {shape, eps}));
    return s;
}

namespace {

void check_f_schedule(const ApproximationSchedule& f) {
    if (f.kind != ApproximationSchedule::Kind::Plain || f.is_system())
        throw std::invalid_argument("diagonal schedules need a plain scalar f-schedule");
    if (f.target_mu.atoms().size() != 1 || f.target_mu.has_diffuse() ||
        std::fabs(f.target_mu.atoms()[0].mass - 1.0) > 1e-12)
        throw std::invalid_argument(
            "diagonal schedules need a unit-mass single-atom target");
}

void check_m_index(const std::vector<int>& m_index, std::size_t nterms) {
    if (m_index.empty())
        throw std::invalid_argument("m_index is empty");
    for (std::size_t n = 0; n < m_index.size(); ++n) {
        if (m_index[n] <= static_cast<int>(n))
            throw std::invalid_argument("m_index[n] must exceed n");
        if (m_index[n] >= static_cast<int>(nterms))
            throw std::invalid_argument("m_index out of range of the f-schedule");
        if (n > 0 && m_index[n] <= m_index[n - 1])
            throw std::invalid_argument("m_index must be strictly increasing");
    }
}

} // namespace

ApproximationSchedule diagonal_schedule_one(const ApproximationSchedule& f_sched,
                                            const std::vector<int>& m_index) {
    check_f_schedule(f_sched);
    check_m_index(m_index, f_sched.size());
    const double pi = std::numbers::pi;
    const Point a = f_sched.target_mu.atoms()[0].location;
    const Domain& dom = f_sched.target_mu.domain();

    ApproximationSchedule s{ApproximationSchedule::Kind::DiagonalOne,
                            {},
                            m_index,
                            {},
                            {},
                            FiniteMeasure::single_atom(dom, a, 5.0 * pi),
                            FiniteMeasure::single_atom(dom, a, 2.0 * pi)};
    for (std::size_t n = 0; n < m_index.size(); ++n) {
        s.epsilons.push_back(f_sched.epsilons[n]);
        s.mu_terms.push_back(
            linear_combine({5.0 * pi}, {&f_sched.mu_terms[m_index[n]]}));
        s.nu_terms.push_back(linear_combine({2.0 * pi}, {&f_sched.mu_terms[n]}));
    }
    return s;
}

ApproximationSchedule diagonal_schedule_two(const ApproximationSchedule& f_sched,
                                            const std::vector<int>& m_index) {
    check_f_schedule(f_sched);
    check_m_index(m_index, f_sched.size());
    const double pi = std::numbers::pi;
    const Point a = f_sched.target_mu.atoms()[0].location;
    const Domain& dom = f_sched.target_mu.domain();

    ApproximationSchedule s{ApproximationSchedule::Kind::DiagonalTwo,
                            {},
                            m_index,
                            {},
                            {},
                            FiniteMeasure::single_atom(dom, a, 5.0 * pi),
                            FiniteMeasure::single_atom(dom, a, 2.0 * pi)};
    for (std::size_t n = 0; n < m_index.size(); ++n) {
        s.epsilons.push_back(f_sched.epsilons[n]);
        s.mu_terms.push_back(linear_combine(
            {4.0 * pi, pi},
            {&f_sched.mu_terms[m_index[n]], &f_sched.mu_terms[n]}));
        s.nu_terms.push_back(
            linear_combine({2.0 * pi}, {&f_sched.mu_terms[m_index[n]]}));
    }
    return s;
}

} // namespace rml
