#pragma once

// Logarithmic Newtonian potential N(m)(x) = (1/2pi) int log(d/|x-y|) dm(y).
//
// newtonian_potential evaluates the kernel quadrature directly at every node
// (atoms exactly off their own cell, the self cell by the cell-averaged
// kernel); cost is O(nodes^2) for diffuse parts, so scenario-scale upper-
// bound checks use newtonian_majorant: the same quadrature on the boundary
// ring only, extended inward by the discrete Poisson solve.  The majorant
// agrees with N(m) to O(h^2) and dominates the zero-trace Poisson solution
// exactly in the discrete maximum-principle sense.

#include "rml/elliptic.hpp"
#include "rml/grid_function.hpp"
#include "rml/measure.hpp"

namespace rml {

GridFunction newtonian_potential(const FiniteMeasure& m);

GridFunction newtonian_majorant(const FiniteMeasure& m,
                                const SolverConfig& cfg = {});

// potential of a single unit atom at `a` evaluated at x (exact kernel)
double log_kernel(const Point& x, const Point& a, double d);

} // namespace rml
