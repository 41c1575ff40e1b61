#pragma once

// Conjugate gradients for the SPD system (-Lap_h + diag(c)) u = b on the
// interior of a rectangle grid with zero Dirichlet values, preconditioned by
// a geometric multigrid V-cycle (damped-Jacobi smoothing, full-weighting /
// bilinear transfer) or plain Jacobi.  Deterministic for fixed inputs.

#include <stdexcept>
#include <vector>

namespace rml {

struct LinearSolveOptions {
    double tol_rel = 1e-10;  // on the euclidean residual, relative to ||b||
    int max_iter = 20000;
    enum class Precond { Multigrid, Jacobi } precond = Precond::Multigrid;
    int smooth_steps = 2;
    double jacobi_omega = 0.8;
};

struct LinearSolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x holds the initial guess on entry and the solution on exit (boundary ring
// forced to zero).  c may be empty (pure Laplacian) or node-sized.
// Returns the number of CG iterations.
int solve_spd(int rows, int cols, double inv_h2, const std::vector<double>& c,
              const std::vector<double>& b, std::vector<double>& x,
              const LinearSolveOptions& opts = {});

} // namespace rml
