#include "s1d/line_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "s1d/error.hpp"

namespace s1d {

Eigenfunction::Eigenfunction(PiecewiseSolution v, double omega, double matching_residual)
    : v_(std::move(v)),
      omega_(omega),
      norm_(std::sqrt(v_.norm_squared())),
      residual_(matching_residual) {}

HalfBoundState HalfBoundState::scaled(double c) const {
  if (c == 0.0) throw DomainError("half_bound_state", "scale factor must be non-zero");
  HalfBoundState r = *this;
  r.v_minus *= c;
  r.v_plus *= c;
  r.solution = solution.scaled(c);
  return r;
}

double mismatch(const Potential& q, double omega) { return mismatch(LineOperator(q), omega); }

int count_negative(const Potential& q) { return count_below(LineOperator(q), 0.0); }

std::vector<SpectralResult> negative_eigenvalues(const Potential& q, double tol) {
  return bound_states(LineOperator(q), tol);
}

std::vector<double> regge_eigenvalues(const Potential& v, double tol) {
  if (!(tol > 0.0)) throw DomainError("regge_eigenvalues", "tol must be positive");
  // Pad to the Regge interval [-1, 1] when the support is smaller.
  std::vector<double> bp(v.breakpoints().data(), v.breakpoints().data() + v.breakpoints().size());
  std::vector<double> vals(v.values().data(), v.values().data() + v.values().size());
  if (bp.front() > -1.0) {
    bp.insert(bp.begin(), -1.0);
    vals.insert(vals.begin(), 0.0);
  }
  if (bp.back() < 1.0) {
    bp.push_back(1.0);
    vals.push_back(0.0);
  }
  const LineOperator op(make_piecewise(bp, vals));
  const double w_max = std::sqrt(std::max(0.0, -v.min_value())) * (1.0 + 1e-12);
  if (w_max == 0.0) return {};

  const double len = bp.back() - bp.front();
  const int n = std::max(512, static_cast<int>(std::ceil(64.0 * w_max * len)));
  std::vector<double> grid;
  const double first = w_max / n;
  for (double w = 1e-8; w < first; w *= 1.25) grid.push_back(w);
  for (int i = 1; i <= n; ++i) grid.push_back(w_max * i / n);

  auto d = [&](double w) { return mismatch(op, w); };
  std::vector<double> roots;
  double wa = grid.front();
  double da = d(wa);
  if (da == 0.0) roots.push_back(wa);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double wb = grid[i];
    const double db = d(wb);
    if (db == 0.0) {
      roots.push_back(wb);
    } else if (da != 0.0 && (da < 0.0) != (db < 0.0)) {
      double a = wa, b = wb, fa = da;
      for (int it = 0; b - a > tol; ++it) {
        if (it > 200) throw ConvergenceError("regge_eigenvalues", "bisection did not converge");
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double fm = d(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if ((fm < 0.0) == (fa < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    wa = wb;
    da = db;
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

Eigenfunction eigenfunction(const Potential& q, double omega) {
  auto f = bound_state_function(LineOperator(q), omega);
  return Eigenfunction(std::move(f.solution), omega, f.matching_residual);
}

std::optional<HalfBoundState> half_bound_state(const Potential& q, double tol) {
  if (!(tol > 0.0)) throw DomainError("half_bound_state", "tol must be positive");
  const LineOperator op(q);
  if (std::abs(mismatch(op, 0.0)) > tol) return std::nullopt;
  HalfBoundState h;
  h.solution = zero_energy_solution(op);
  h.v_minus = h.solution.left_amplitude();
  h.v_plus = h.solution.right_amplitude();
  if (h.v_plus == 0.0) throw ConvergenceError("half_bound_state", "vanishing limit v_+");
  h.theta = h.v_plus / h.v_minus;
  return h;
}

std::pair<double, double> theta_eta(const HalfBoundState& hbs, const Potential& u) {
  const double theta = hbs.v_plus / hbs.v_minus;
  const double eta = hbs.solution.weighted_square_integral(u) / (hbs.v_minus * hbs.v_plus);
  return {theta, eta};
}

std::pair<double, double> theta_eta(const Potential& v, const Potential& u) {
  const auto hbs = half_bound_state(v);
  if (!hbs) throw DomainError("theta_eta", "V must be resonant");
  return theta_eta(*hbs, u);
}

std::vector<double> resonance_set(const Potential& v, double lo, double hi, double tol) {
  if (!(lo < hi)) throw DomainError("resonance_set", "need lo < hi");
  if (!(tol > 0.0)) throw DomainError("resonance_set", "tol must be positive");
  if (v.is_zero()) throw DomainError("resonance_set", "V must not vanish identically");

  auto count = [&](double a) { return a == 0.0 ? 0 : count_negative(a * v); };
  // The margin also keeps the scan off alpha = 0, where every alpha V is
  // within rounding of resonant.
  const double margin = std::max(tol, 1e-7 * (hi - lo));
  const double a0 = lo + margin;
  const double a1 = hi - margin;
  if (!(a0 < a1)) return {};

  std::vector<double> out;
  std::function<void(double, int, double, int)> split = [&](double a, int na, double b, int nb) {
    if (na == nb) return;
    if (b - a <= tol) {
      for (int i = 0; i < std::abs(nb - na); ++i) out.push_back(0.5 * (a + b));
      return;
    }
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) {
      out.push_back(mid);
      return;
    }
    const int nm = count(mid);
    split(a, na, mid, nm);
    split(mid, nm, b, nb);
  };

  constexpr int cells = 200;
  double a = a0;
  int na = count(a);
  for (int i = 1; i <= cells; ++i) {
    const double b = i == cells ? a1 : a0 + (a1 - a0) * i / cells;
    const int nb = count(b);
    split(a, na, b, nb);
    a = b;
    na = nb;
  }
  return out;
}

}  // namespace s1d
