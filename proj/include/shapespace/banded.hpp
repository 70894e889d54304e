#pragma once

#include <vector>

namespace shapespace {

// Direct solvers for the small banded systems arising from the projection
// operators. Both throw std::domain_error on a vanishing pivot.

// Tridiagonal system: lower[i]*x[i-1] + diag[i]*x[i] + upper[i]*x[i+1] = rhs[i],
// with lower[0] and upper[n-1] ignored. Thomas elimination, no pivoting.
std::vector<double> solve_tridiagonal(const std::vector<double>& lower,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& upper,
                                      const std::vector<double>& rhs);

// Periodic tridiagonal system: the same rows with wrap-around corner entries
// lower[0] = A[0][n-1] and upper[n-1] = A[n-1][0]. Solved by the
// Sherman-Morrison rank-one correction of two plain tridiagonal solves.
std::vector<double> solve_cyclic_tridiagonal(const std::vector<double>& lower,
                                             const std::vector<double>& diag,
                                             const std::vector<double>& upper,
                                             const std::vector<double>& rhs);

}  // namespace shapespace
