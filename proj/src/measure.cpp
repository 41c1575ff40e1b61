#include "rml/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rml {
namespace {

std::vector<Atom> normalize_atoms(const Domain& dom, std::vector<Atom> in) {
    for (const Atom& a : in) {
        if (a.mass < 0.0)
            throw std::invalid_argument("atom mass must be nonnegative");
        if (dom.boundary_distance(a.location) < 2.0 * dom.h())
            throw std::invalid_argument(
                "atom at (" + std::to_string(a.location.x) + ", " +
                std::to_string(a.location.y) +
                ") must lie at least 2h inside the domain");
    }
    // merge bitwise-equal locations, reject sub-grid near-duplicates
    std::vector<Atom> out;
    for (const Atom& a : in) {
        bool merged = false;
        for (Atom& b : out) {
            if (b.location == a.location) {
                b.mass += a.mass;
                merged = true;
                break;
            }
            if (dist(b.location, a.location) < 0.5 * dom.h())
                throw std::invalid_argument(
                    "distinct atoms closer than h/2 are not representable on "
                    "this grid");
        }
        if (!merged)
            out.push_back(a);
    }
    return out;
}

} // namespace

FiniteMeasure::FiniteMeasure(Domain domain, std::vector<double> diffuse,
                             std::vector<Atom> atoms)
    : domain_(domain),
      diffuse_(std::move(diffuse)),
      atoms_(normalize_atoms(domain, std::move(atoms))) {
    if (!diffuse_.empty()) {
        if (static_cast<int>(diffuse_.size()) != domain_.node_count())
            throw std::invalid_argument("diffuse density size does not match grid");
        for (double v : diffuse_)
            if (!(v >= 0.0) || !std::isfinite(v))
                throw std::invalid_argument("diffuse density must be finite and >= 0");
    }
}

FiniteMeasure FiniteMeasure::uniform(const Domain& d, double density) {
    if (density < 0.0)
        throw std::invalid_argument("density must be nonnegative");
    return {d, std::vector<double>(d.node_count(), density), {}};
}

FiniteMeasure FiniteMeasure::gaussian(const Domain& d, Point center,
                                      double sigma, double mass) {
    if (!(sigma > 0.0) || mass < 0.0)
        throw std::invalid_argument("gaussian needs sigma > 0 and mass >= 0");
    std::vector<double> rho(d.node_count(), 0.0);
    const double cutoff = 3.0 * sigma;
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) {
            double r = dist(d.node(i, j), center);
            if (r <= cutoff)
                rho[d.index(i, j)] = std::exp(-0.5 * (r / sigma) * (r / sigma));
        }
    FiniteMeasure raw(d, std::move(rho), {});
    double m = raw.diffuse_mass();
    if (m <= 0.0)
        throw std::invalid_argument("gaussian support does not meet the grid");
    std::vector<double> scaled = raw.diffuse();
    for (double& v : scaled)
        v *= mass / m;
    return {d, std::move(scaled), {}};
}

double FiniteMeasure::diffuse_mass() const {
    if (diffuse_.empty())
        return 0.0;
    const int rows = domain_.rows(), cols = domain_.cols();
    double s = 0.0;
    for (int i = 0; i < rows; ++i) {
        double wi = (i == 0 || i == rows - 1) ? 0.5 : 1.0;
        for (int j = 0; j < cols; ++j) {
            double wj = (j == 0 || j == cols - 1) ? 0.5 : 1.0;
            s += wi * wj * diffuse_[domain_.index(i, j)];
        }
    }
    return s * domain_.h() * domain_.h();
}

double FiniteMeasure::atom_mass_total() const {
    double s = 0.0;
    for (const Atom& a : atoms_)
        s += a.mass;
    return s;
}

double FiniteMeasure::atom_mass(const Point& x) const {
    for (const Atom& a : atoms_)
        if (a.location == x)
            return a.mass;
    return 0.0;
}

std::vector<Point> FiniteMeasure::overweight_atoms(double threshold) const {
    if (!(threshold > 0.0))
        throw std::invalid_argument("threshold must be positive");
    std::vector<Point> out;
    for (const Atom& a : atoms_)
        if (a.mass >= threshold)
            out.push_back(a.location);
    return out;
}

FiniteMeasure FiniteMeasure::restrict_ball(Point center, double r) const {
    if (!(r > 0.0))
        throw std::invalid_argument("restriction radius must be positive");
    std::vector<double> rho = diffuse_;
    if (!rho.empty()) {
        for (int i = 0; i < domain_.rows(); ++i)
            for (int j = 0; j < domain_.cols(); ++j)
                if (dist(domain_.node(i, j), center) > r)
                    rho[domain_.index(i, j)] = 0.0;
    }
    std::vector<Atom> kept;
    for (const Atom& a : atoms_)
        if (dist(a.location, center) <= r)
            kept.push_back(a);
    return {domain_, std::move(rho), std::move(kept)};
}

FiniteMeasure linear_combine(const std::vector<double>& coeffs,
                             const std::vector<const FiniteMeasure*>& ms) {
    if (coeffs.size() != ms.size() || ms.empty())
        throw std::invalid_argument("linear_combine needs matching nonempty lists");
    const Domain& dom = ms[0]->domain();
    for (const FiniteMeasure* m : ms)
        if (!(m->domain() == dom))
            throw std::invalid_argument("linear_combine: measures live on different domains");
    for (double c : coeffs)
        if (c < 0.0)
            throw std::invalid_argument("linear_combine: coefficients must be nonnegative");

    std::vector<double> rho;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        if (!ms[k]->has_diffuse() || coeffs[k] == 0.0)
            continue;
        if (rho.empty())
            rho.assign(dom.node_count(), 0.0);
        const std::vector<double>& src = ms[k]->diffuse();
        for (int n = 0; n < dom.node_count(); ++n)
            rho[n] += coeffs[k] * src[n];
    }
    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        if (coeffs[k] == 0.0)
            continue;
        for (const Atom& a : ms[k]->atoms())
            atoms.push_back({a.location, coeffs[k] * a.mass});
    }
    return {dom, std::move(rho), std::move(atoms)};
}

} // namespace rml
