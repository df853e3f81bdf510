#include "s1d/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "s1d/error.hpp"
#include "s1d/line_spectrum.hpp"
#include "s1d/point_models.hpp"

namespace s1d {

std::string convention_name(SignConvention c) {
  return c == SignConvention::derivation_minus ? "minus" : "plus";
}

SignConvention parse_convention(const std::string& name) {
  if (name == "minus" || name == "derivation_minus") return SignConvention::derivation_minus;
  if (name == "plus" || name == "theorem_plus") return SignConvention::theorem_plus;
  throw DomainError("parse_convention", "convention must be 'minus' or 'plus'");
}

double LowLyingPrediction::predict(std::size_t k, double eps, SignConvention c) const {
  const double s = c == SignConvention::derivation_minus ? -1.0 : 1.0;
  const double w = omega.at(k) + s * eps * kappa.at(k);
  return -w * w / (eps * eps);
}

LowLyingPrediction low_lying_prediction(const Potential& v, const Potential& u,
                                        SignConvention convention) {
  const auto states = negative_eigenvalues(v);
  if (states.empty()) {
    throw DomainError("low_lying_prediction", "V has no negative eigenvalues");
  }
  LowLyingPrediction p;
  p.convention = convention;
  for (const auto& s : states) {
    const auto ef = eigenfunction(v, s.omega);
    const double n2 = ef.norm() * ef.norm();
    p.omega.push_back(s.omega);
    p.kappa.push_back(ef.solution().weighted_square_integral(u) / (2.0 * s.omega * n2));
  }
  return p;
}

double gamma_pairwise(const Potential& u) {
  double g = 0.0;
  for (Eigen::Index i = 0; i < u.pieces(); ++i) {
    const double ui = u.values()[i];
    const double li = u.piece_length(i);
    const double mi = 0.5 * (u.piece_left(i) + u.piece_right(i));
    g += ui * ui * li * li * li / 6.0;
    for (Eigen::Index j = i + 1; j < u.pieces(); ++j) {
      const double mj = 0.5 * (u.piece_left(j) + u.piece_right(j));
      g += ui * u.values()[j] * li * u.piece_length(j) * (mj - mi);
    }
  }
  return g;
}

double gamma_ordered(const Potential& u) {
  // F(t) = t A(t) - B(t), A = int^t U, B = int^t tau U.
  double a = 0.0, b = 0.0, g = 0.0;
  for (Eigen::Index j = 0; j < u.pieces(); ++j) {
    const double x0 = u.piece_left(j);
    const double x1 = u.piece_right(j);
    const double l = x1 - x0;
    const double uj = u.values()[j];
    g += uj * (a * (x1 * x1 - x0 * x0) / 2.0 - b * l + uj * l * l * l / 6.0);
    a += uj * l;
    b += uj * (x1 * x1 - x0 * x0) / 2.0;
  }
  return g;
}

namespace {

// Values of W on either side of x = 0.
std::pair<double, double> values_at_origin(const Potential& w) {
  auto side = [&](bool right) {
    if (right ? (0.0 < w.left() || 0.0 >= w.right()) : (0.0 <= w.left() || 0.0 > w.right())) {
      return 0.0;
    }
    const auto* bp = w.breakpoints().data();
    const auto* end = bp + w.breakpoints().size();
    const auto it = right ? std::upper_bound(bp, end, 0.0) : std::lower_bound(bp, end, 0.0);
    return w.values()[(it - bp) - 1];
  };
  return {side(false), side(true)};
}

}  // namespace

DeltaPrediction delta_prediction(const Potential& w, const Potential& u) {
  const auto [wl, wr] = values_at_origin(w);
  if (wl != wr) throw DomainError("delta_prediction", "W must be constant near 0");
  DeltaPrediction p;
  p.alpha = moment(u, 0);
  const auto j = InterfaceParams::delta(p.alpha);
  const auto spec = interface_spectrum(w, j, 1e-13);
  if (spec.empty()) {
    throw DomainError("delta_prediction", "S_alpha has no negative eigenvalue");
  }
  const double omega = spec.front().omega;
  const auto psi = interface_eigenfunction(w, j, omega);
  p.lambda0 = -omega * omega;
  const auto right = psi.solution().at(0.0);
  const auto left = psi.solution().at_left(0.0);
  p.psi0 = left[0];
  p.dpsi_left = left[1];
  p.dpsi_right = right[1];
  p.gamma = gamma_pairwise(u);
  p.gamma_ordered = gamma_ordered(u);
  p.alpha1 = moment(u, 1);
  p.lambda1 = p.gamma * p.psi0 * p.psi0 + p.alpha1 * p.psi0 * (p.dpsi_left + p.dpsi_right);
  return p;
}

ResonantPrediction resonant_finite_prediction(const Potential& v, const Potential& u) {
  const auto hbs = half_bound_state(v);
  if (!hbs) throw DomainError("resonant_finite_prediction", "V must be resonant");
  ResonantPrediction p;
  p.v_minus = hbs->v_minus;
  p.v_plus = hbs->v_plus;
  p.u_v2 = hbs->solution.weighted_square_integral(u);
  if (!(p.u_v2 < 0.0)) {
    throw DomainError("resonant_finite_prediction", "need integral of U v^2 < 0");
  }
  const double s = p.v_minus * p.v_minus + p.v_plus * p.v_plus;
  p.threshold_a = p.u_v2 / s;
  p.value = -(p.u_v2 * p.u_v2) / (s * s);
  return p;
}

bool existence_verdict(const Potential& v) { return !v.is_zero() && moment(v, 0) <= 0.0; }

}  // namespace s1d
