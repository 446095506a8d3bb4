#pragma once

#include <functional>
#include <optional>

#include "ngc/algebra.hpp"

namespace ngc {

/// Affine solution set of A x = z: minimum-norm particular solution plus an
/// orthonormal basis of the numerical nullspace.
struct AffineSolutionSet {
    ComplexVector particular;
    std::vector<ComplexVector> basis;
    int rank = 0;
    bool consistent = true;  // least-squares residual below threshold
};

/// SVD-based solve with relative rank threshold rank_tol (on sigma_max).
AffineSolutionSet solve_affine(const ComplexMatrix& A, const ComplexVector& z,
                               double rank_tol = 1e-8);

struct NewtonResult {
    ComplexVector x;
    double residual_norm = 0;  // max-norm of residual at x
    int iterations = 0;
    bool converged = false;
};

/// Damped Gauss-Newton on a complex residual, treating real and imaginary
/// parts of the unknowns as independent reals. Jacobian by central finite
/// differences with step 1e-7.
NewtonResult newton_polish(const std::function<ComplexVector(const ComplexVector&)>& residual,
                           const ComplexVector& x0, double tol = 1e-11, int max_iter = 100);

}  // namespace ngc
