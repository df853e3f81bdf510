#ifndef S1D_LINE_SPECTRUM_HPP
#define S1D_LINE_SPECTRUM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "s1d/line_operator.hpp"
#include "s1d/potential.hpp"
#include "s1d/solution.hpp"

namespace s1d {

/// Normalized bound state of -d^2/dx^2 + q, positive on the left tail.
class Eigenfunction {
 public:
  Eigenfunction(PiecewiseSolution v, double omega, double matching_residual);

  double value(double x) const { return v_.value(x); }
  double derivative(double x) const { return v_.derivative(x); }
  double tail_rate() const { return omega_; }
  /// (a_-, a_+): v = a_- e^{omega (x - x_0)} left of the grid, a_+ e^{-omega (x - x_m)} right of it.
  std::pair<double, double> tail_amplitudes() const {
    return {v_.left_amplitude(), v_.right_amplitude()};
  }
  /// Full-line L2 norm of the stored function.
  double norm() const { return norm_; }
  double matching_residual() const { return residual_; }
  const PiecewiseSolution& solution() const { return v_; }

 private:
  PiecewiseSolution v_;
  double omega_;
  double norm_;
  double residual_;
};

struct HalfBoundState {
  double v_minus = 1.0;
  double v_plus = 1.0;
  double theta = 1.0;
  PiecewiseSolution solution;  ///< v(x_0) = v_minus, v'(x_0) = 0, constant tails

  HalfBoundState scaled(double c) const;
};

double mismatch(const Potential& q, double omega);
int count_negative(const Potential& q);
std::vector<SpectralResult> negative_eigenvalues(const Potential& q, double tol = 1e-12);

/// Positive zeros of the mismatch on the Regge interval, found by scanning
/// for sign changes rather than by node counts. Descending order.
std::vector<double> regge_eigenvalues(const Potential& v, double tol = 1e-12);

Eigenfunction eigenfunction(const Potential& q, double omega);

std::optional<HalfBoundState> half_bound_state(const Potential& q,
                                               double tol = kResonanceTolerance);

/// (theta, eta) of a resonant V perturbed by U.
std::pair<double, double> theta_eta(const Potential& v, const Potential& u);
std::pair<double, double> theta_eta(const HalfBoundState& hbs, const Potential& u);

/// All alpha in (lo, hi) with alpha V resonant.
std::vector<double> resonance_set(const Potential& v, double lo, double hi, double tol = 1e-10);

}  // namespace s1d

#endif  // S1D_LINE_SPECTRUM_HPP
