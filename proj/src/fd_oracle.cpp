#include "s1d/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "s1d/error.hpp"

namespace s1d::fd {

Tridiag build(const Potential& q, double L, int n) {
  if (!(L > q.support_radius()) || !std::isfinite(L)) {
    throw DomainError("fd_build", "L must exceed the support radius of q");
  }
  if (n < 100) throw DomainError("fd_build", "need n >= 100");
  Tridiag t;
  t.n = n;
  t.L = L;
  t.h = 2.0 * L / (n + 1);
  const double h = t.h;
  const double h2 = 1.0 / (h * h);
  t.diag.assign(n, 2.0 * h2);
  t.offdiag.assign(n - 1, -h2);
  // Only cells meeting the support see q.
  const int first = std::max(1, static_cast<int>(std::floor((q.left() + L) / h - 0.5)));
  const int last = std::min(n, static_cast<int>(std::ceil((q.right() + L) / h + 0.5)));
  for (int i = first; i <= last; ++i) {
    const double x = -L + i * h;
    t.diag[i - 1] += integral(q, x - 0.5 * h, x + 0.5 * h) / h;
  }
  return t;
}

int sturm_count(const Tridiag& t, double lambda) {
  const double b2max = t.offdiag.empty() ? 0.0 : t.offdiag[0] * t.offdiag[0];
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, b2max);
  int count = 0;
  double d = t.diag[0] - lambda;
  if (std::abs(d) < pivmin) d = -pivmin;
  if (d < 0.0) ++count;
  for (int i = 1; i < t.n; ++i) {
    const double b = t.offdiag[i - 1];
    d = t.diag[i] - lambda - b * b / d;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(const Tridiag& t, int m, double tol) {
  if (m < 1) throw DomainError("lowest_eigenvalues", "need m >= 1");
  if (m > t.n) throw DomainError("lowest_eigenvalues", "m exceeds the matrix size");
  if (!(tol > 0.0)) throw DomainError("lowest_eigenvalues", "tol must be positive");
  // Gershgorin
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < t.n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.offdiag[i - 1]);
    if (i + 1 < t.n) r += std::abs(t.offdiag[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  std::vector<double> out;
  double floor_k = lo;
  for (int k = 0; k < m; ++k) {
    double a = floor_k, b = hi;
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(t, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out.push_back(0.5 * (a + b));
    floor_k = a;
  }
  return out;
}

double default_half_width(const Potential& q, double omega_min) {
  if (!(omega_min > 0.0)) return std::max(30.0, q.support_radius() + 1.0);
  return std::max(30.0, q.support_radius() + 12.0 / omega_min);
}

}  // namespace s1d::fd
