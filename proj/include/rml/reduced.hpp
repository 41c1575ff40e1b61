#pragma once

// Closed-form reduced measures and good-measure predicates.

#include <vector>

#include "rml/measure.hpp"
#include "rml/nonlinearity.hpp"

namespace rml {

// true iff every atom mass is <= the capacity of nl (<= is inclusive: the
// boundary case is solvable)
bool good_measure_scalar(const FiniteMeasure& m, const Nonlinearity& nl);

// true iff at every point the atom masses of mu and nu sum to <= 4*pi
bool good_measure_system(const FiniteMeasure& mu, const FiniteMeasure& nu);

// diffuse part unchanged, every atom mass clipped to min(mass, capacity)
FiniteMeasure scalar_reduced(const FiniteMeasure& m, const Nonlinearity& nl);

// the sum measure mu + nu with atom sums clipped at 4*pi
FiniteMeasure system_reduced_sum(const FiniteMeasure& mu,
                                 const FiniteMeasure& nu);

struct SystemAtomResolution {
    enum class Status { Determined, Indeterminate };
    Status status = Status::Determined;
    double mu_atom = 0.0;                                // valid when Determined
    double nu_atom = 0.0;                                // valid when Determined
    std::vector<std::pair<double, double>> attainable_examples;  // Indeterminate
};

// Atomic part of the reduced limit at a single point with masses
// (mu_a, nu_a):
//   - mu_a + nu_a <= 4*pi:            unchanged
//   - one side zero:                  other side clipped to 4*pi
//   - both sides <= 4*pi:             each reduced by (mu_a + nu_a - 4*pi)/2
//   - otherwise:                      sequence-dependent (Indeterminate);
//     the worked (5*pi, 2*pi) instance carries the attainable example pairs
//     (3*pi, pi) and (7*pi/2, pi/2)
SystemAtomResolution system_reduced_atoms(double mu_a, double nu_a);

} // namespace rml
