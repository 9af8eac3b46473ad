#pragma once

#include <vector>

#include "paley/symmat.hpp"

namespace paley {

// Cyclic Jacobi for symmetric matrices.  Sweeps rotate away every
// off-diagonal entry in row-major order until the off-diagonal Frobenius
// norm drops below `off_tol` (absolute, floored at 1e-14 relative to the
// input norm).  Deterministic; throws ConvergenceFailure after `max_sweeps`.
// Returns the eigenvalues sorted ascending.
std::vector<double> jacobi_eigenvalues(const SymMatrix& m, double off_tol = 1e-10,
                                       int max_sweeps = 300);

}  // namespace paley
