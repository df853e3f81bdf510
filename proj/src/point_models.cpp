#include "s1d/point_models.hpp"

#include <cmath>
#include <string>

#include "s1d/error.hpp"
#include "s1d/line_operator.hpp"

namespace s1d {

Eigen::Matrix2d InterfaceParams::jump() const {
  Eigen::Matrix2d m;
  if (kind == Kind::delta) {
    if (!std::isfinite(alpha)) throw DomainError("interface_spectrum", "alpha must be finite");
    m << 1.0, 0.0, alpha, 1.0;
    return m;
  }
  if (theta == 0.0) throw DomainError("interface_spectrum", "theta must be non-zero");
  if (!std::isfinite(theta) || !std::isfinite(eta)) {
    throw DomainError("interface_spectrum", "theta and eta must be finite");
  }
  m << theta, 0.0, eta, 1.0 / theta;
  return m;
}

namespace {

LineOperator interface_operator(const Potential& w, const InterfaceParams& j) {
  return LineOperator(w, Interface{0.0, j.jump()});
}

}  // namespace

std::vector<SpectralResult> interface_spectrum(const Potential& w, const InterfaceParams& j,
                                               double tol) {
  if (!(tol > 0.0)) throw DomainError("interface_spectrum", "tol must be positive");
  return bound_states(interface_operator(w, j), tol);
}

Eigenfunction interface_eigenfunction(const Potential& w, const InterfaceParams& j,
                                      double omega) {
  auto f = bound_state_function(interface_operator(w, j), omega);
  return Eigenfunction(std::move(f.solution), omega, f.matching_residual);
}

std::optional<double> closed_form(const InterfaceParams& j) {
  if (j.kind == InterfaceParams::Kind::delta) {
    if (j.alpha < 0.0) return -j.alpha * j.alpha / 4.0;
    return std::nullopt;
  }
  if (j.theta == 0.0) throw DomainError("closed_form", "theta must be non-zero");
  if (j.eta * j.theta < 0.0) {
    const double t2 = j.theta * j.theta;
    return -j.eta * j.eta * t2 / ((t2 + 1.0) * (t2 + 1.0));
  }
  return std::nullopt;
}

ThresholdResult threshold_alpha0(const MomentFunction& moment, double tol) {
  if (tol < 0.0) throw DomainError("threshold_alpha0", "tol must be non-negative");
  auto f = [&](double a) {
    const double m = moment(a);
    if (!std::isfinite(m)) {
      throw DomainError("threshold_alpha0", "moment is not finite at alpha = " + std::to_string(a));
    }
    return a + 2.0 * m;
  };

  // f increases on (-inf, 0]; find a < b <= 0 with f(a) < 0 <= f(b).
  double a = -1.0, b = -1.0;
  double fb = f(b);
  if (fb >= 0.0) {
    for (int i = 0;; ++i) {
      if (i > 1100) throw ConvergenceError("threshold_alpha0", "no sign change toward -inf");
      a *= 2.0;
      if (f(a) < 0.0) break;
      b = a;
    }
  } else {
    a = b;
    for (int i = 0;; ++i) {
      if (i > 200) {
        // f < 0 all the way to 0^-; the zero is alpha = 0 itself if f(0) = 0.
        const double f0 = f(0.0);
        if (f0 >= 0.0) return {0.0, f0};
        throw ConvergenceError("threshold_alpha0", "f is negative on (-inf, 0]");
      }
      b *= 0.5;
      fb = f(b);
      if (fb >= 0.0) break;
      a = b;
    }
  }
  for (int it = 0; it < 2000 && b - a > tol; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    if (f(mid) < 0.0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  const double fa = f(a);
  const double fbb = f(b);
  return std::abs(fa) < std::abs(fbb) ? ThresholdResult{a, fa} : ThresholdResult{b, fbb};
}

ThresholdResult threshold_alpha0(const Potential& w, double tol) {
  return threshold_alpha0([&w](double a) { return exp_moment(w, a); }, tol);
}

MomentFunction sine_moment(double b) {
  return [b](double alpha) { return -2.0 * b * b / alpha; };
}

MomentFunction harmonic_moment(double k) {
  return [k](double alpha) { return -4.0 * k / (alpha * alpha * alpha); };
}

ResonantCondition check_resonant_condition(const Potential& v, const Potential& u,
                                           const Potential& w) {
  const auto hbs = half_bound_state(v);
  if (!hbs) throw DomainError("check_resonant_condition", "V must be resonant");
  ResonantCondition r;
  const double vm2 = hbs->v_minus * hbs->v_minus;
  const double vp2 = hbs->v_plus * hbs->v_plus;
  r.lhs = vm2 * integral(w, w.left(), 0.0) + vp2 * integral(w, 0.0, w.right());
  r.rhs = -0.5 * hbs->solution.weighted_square_integral(u);
  r.holds = r.lhs < r.rhs;
  return r;
}

}  // namespace s1d
