#ifndef S1D_FD_ORACLE_HPP
#define S1D_FD_ORACLE_HPP

// Second-order finite differences on [-L, L] with Dirichlet ends, solved by
// Sturm-sequence bisection. Shares nothing with the shooting code beyond the
// Potential type, which is the point.

#include <vector>

#include "s1d/potential.hpp"

namespace s1d::fd {

struct Tridiag {
  int n = 0;
  std::vector<double> diag;
  std::vector<double> offdiag;
  double h = 0.0;
  double L = 0.0;
};

/// n interior nodes x_i = -L + i h, h = 2L / (n + 1); q enters as its
/// average over [x_i - h/2, x_i + h/2].
Tridiag build(const Potential& q, double L, int n);

/// Number of eigenvalues strictly below lambda.
int sturm_count(const Tridiag& t, double lambda);

/// The m smallest eigenvalues, ascending, each to |d lambda| <= tol.
std::vector<double> lowest_eigenvalues(const Tridiag& t, int m, double tol);

/// Half-width that keeps truncation below ~exp(-24) for decay rate omega_min.
double default_half_width(const Potential& q, double omega_min);

}  // namespace s1d::fd

#endif  // S1D_FD_ORACLE_HPP
