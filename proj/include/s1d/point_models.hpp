#ifndef S1D_POINT_MODELS_HPP
#define S1D_POINT_MODELS_HPP

// Point interactions at x = 0 over a background W:
//   delta(alpha):       y(+0) = y(-0),        y'(+0) - y'(-0) = alpha y(0)
//   theta_eta(th, eta): y(+0) = th y(-0),     y'(+0) = y'(-0) / th + eta y(-0)

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "s1d/line_spectrum.hpp"
#include "s1d/potential.hpp"

namespace s1d {

struct InterfaceParams {
  enum class Kind { delta, theta_eta };
  Kind kind = Kind::delta;
  double alpha = 0.0;
  double theta = 1.0;
  double eta = 0.0;

  static InterfaceParams delta(double alpha) { return {Kind::delta, alpha, 1.0, 0.0}; }
  static InterfaceParams theta_eta(double theta, double eta) {
    return {Kind::theta_eta, 0.0, theta, eta};
  }

  /// Maps (y(-0), y'(-0)) to (y(+0), y'(+0)).
  Eigen::Matrix2d jump() const;
};

std::vector<SpectralResult> interface_spectrum(const Potential& w, const InterfaceParams& j,
                                               double tol = 1e-12);

Eigenfunction interface_eigenfunction(const Potential& w, const InterfaceParams& j,
                                      double omega);

/// Eigenvalue for W = 0, if there is one.
std::optional<double> closed_form(const InterfaceParams& j);

struct ThresholdResult {
  double alpha0 = 0.0;
  double f_residual = 0.0;
};

using MomentFunction = std::function<double(double)>;

/// The non-positive zero of f(alpha) = alpha + 2 moment(alpha), where
/// moment(alpha) is the integral of W e^{alpha |x|}.
ThresholdResult threshold_alpha0(const MomentFunction& moment, double tol = 0.0);
ThresholdResult threshold_alpha0(const Potential& w, double tol = 0.0);

/// W = b^2 (1 + sin x): moment = -2 b^2 / alpha.
MomentFunction sine_moment(double b);
/// W = k x^2: moment = -4 k / alpha^3.
MomentFunction harmonic_moment(double k);

struct ResonantCondition {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

ResonantCondition check_resonant_condition(const Potential& v, const Potential& u,
                                           const Potential& w);

}  // namespace s1d

#endif  // S1D_POINT_MODELS_HPP
