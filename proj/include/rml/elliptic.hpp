#pragma once

// Finite-difference Dirichlet solvers on the uniform 5-point grid:
//   solve_poisson   -Lap u = f,            u = 0 on the boundary
//   solve_scalar    -Lap u + g(u) = f,     damped Newton with a monotone
//                                          fallback started from the Poisson
//                                          supersolution
//   solve_system    -Lap u + e^v (e^u - 1) = fmu
//                   -Lap v + e^u (e^v - 1) = fnu   (block Gauss-Seidel)
//
// Dirac data never enter these solvers; callers pass mollified (diffuse)
// measures and study the small-width limit.

#include <optional>
#include <stdexcept>
#include <vector>

#include "rml/grid_function.hpp"
#include "rml/linear_solver.hpp"
#include "rml/measure.hpp"
#include "rml/nonlinearity.hpp"

namespace rml {

struct SolverConfig {
    double newton_tol = 1e-8;       // max-norm of the nonlinear residual
    int newton_max_iters = 60;
    double min_step = std::pow(0.5, 20);  // line-search floor
    double linear_solver_tol = 1e-10;     // relative euclidean residual
    double outer_gs_tol = 1e-8;     // L1 gap between system sweeps
    int outer_gs_max_iters = 200;
    LinearSolveOptions::Precond precond = LinearSolveOptions::Precond::Multigrid;
};

// Structured non-convergence: carries the last iterate for post-mortems.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& msg, GridFunction last, int iterations)
        : std::runtime_error(msg), last_iterate(std::move(last)),
          iterations(iterations) {}
    GridFunction last_iterate;
    int iterations;
};

GridFunction solve_poisson(const FiniteMeasure& f, const SolverConfig& cfg = {});

// nonzero Dirichlet variant: boundary holds the prescribed trace
GridFunction solve_poisson_dirichlet(const FiniteMeasure& f,
                                     const GridFunction& boundary_values,
                                     const SolverConfig& cfg = {});

GridFunction solve_scalar(const FiniteMeasure& f, const Nonlinearity& nl,
                          const SolverConfig& cfg = {});

// scalar solve with nonlinearity w(x) * (e^t - 1); used by the system sweeps
GridFunction solve_scalar_weighted(const FiniteMeasure& f,
                                   const std::vector<double>& weight,
                                   const SolverConfig& cfg,
                                   const GridFunction* warm_start = nullptr);

struct SystemSolution {
    GridFunction u;
    GridFunction v;
    int sweeps = 0;
};

SystemSolution solve_system(const FiniteMeasure& fmu, const FiniteMeasure& fnu,
                            const SolverConfig& cfg = {},
                            const SystemSolution* warm_start = nullptr);

// g(u) sampled on the grid
GridFunction apply_nonlinearity(const GridFunction& u, const Nonlinearity& nl);

// -Lap_h u sampled on interior nodes (boundary rows zero)
GridFunction discrete_laplacian(const GridFunction& u);

// h^2 * sum of g(u) over interior nodes (the L1 mass of the absorption term)
double absorption_l1(const GridFunction& u, const Nonlinearity& nl);

} // namespace rml
