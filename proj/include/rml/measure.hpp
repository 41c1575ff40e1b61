#pragma once

// Finite nonnegative measures on a rectangle, split into a node-sampled
// diffuse density (mass / area) and a finite list of point atoms.
//
// Measures are immutable after construction; all operations return new
// values and are safe to share across threads.

#include <optional>
#include <vector>

#include "rml/geometry.hpp"

namespace rml {

struct Atom {
    Point location;
    double mass = 0.0;
};

class FiniteMeasure {
public:
    // diffuse: node densities, row-major rows() x cols(), or empty for none.
    // Atoms at bitwise-equal locations are merged by summing masses; atoms
    // closer than h/2 apart but not equal are rejected, as are atoms within
    // 2h of the boundary and negative masses.
    FiniteMeasure(Domain domain, std::vector<double> diffuse,
                  std::vector<Atom> atoms);

    static FiniteMeasure zero(const Domain& d) { return {d, {}, {}}; }
    static FiniteMeasure single_atom(const Domain& d, Point at, double mass) {
        return {d, {}, {Atom{at, mass}}};
    }
    static FiniteMeasure uniform(const Domain& d, double density);
    // truncated-at-3-sigma Gaussian blob scaled to the given total mass
    static FiniteMeasure gaussian(const Domain& d, Point center, double sigma,
                                  double mass);

    const Domain& domain() const { return domain_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    bool has_diffuse() const { return !diffuse_.empty(); }
    bool diffuse_only() const { return atoms_.empty(); }
    // node densities; empty vector means identically zero
    const std::vector<double>& diffuse() const { return diffuse_; }
    double diffuse_at(int i, int j) const {
        return diffuse_.empty() ? 0.0 : diffuse_[domain_.index(i, j)];
    }

    // trapezoidal integral of the diffuse density
    double diffuse_mass() const;
    double atom_mass_total() const;
    double total_mass() const { return diffuse_mass() + atom_mass_total(); }

    // mass of the atom exactly at x (0 if none)
    double atom_mass(const Point& x) const;

    // atom locations with mass >= threshold
    std::vector<Point> overweight_atoms(double threshold) const;

    // diffuse density zeroed at nodes outside B_r(center), atoms outside
    // dropped
    FiniteMeasure restrict_ball(Point center, double r) const;

private:
    Domain domain_;
    std::vector<double> diffuse_;
    std::vector<Atom> atoms_;
};

// sum coeffs[k] * ms[k]; all measures must share one domain and every
// coefficient must be nonnegative
FiniteMeasure linear_combine(const std::vector<double>& coeffs,
                             const std::vector<const FiniteMeasure*>& ms);

inline FiniteMeasure add(const FiniteMeasure& a, const FiniteMeasure& b) {
    return linear_combine({1.0, 1.0}, {&a, &b});
}

} // namespace rml
