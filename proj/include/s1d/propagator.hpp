#ifndef S1D_PROPAGATOR_HPP
#define S1D_PROPAGATOR_HPP

// Closed-form transfer matrices for u'' = (q - lambda) u on pieces where q
// is constant, with overflow-safe scaling and analytic zero counting.
//
// A ScaledMatrix stands for exp(logscale) * m and a State for
// exp(logscale) * (u, u'). Both are renormalized after every piece, so the
// exponential growth of decaying/growing solutions only ever shows up in
// the logscale.

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Core>
#include <Eigen/LU>

#include "s1d/error.hpp"
#include "s1d/potential.hpp"

namespace s1d {

template <typename Scalar>
struct ScaledMatrix {
  using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

  Matrix2 m = Matrix2::Identity();
  Scalar logscale = Scalar(0);

  static ScaledMatrix identity() { return {}; }

  /// Rescale so that the largest entry of m has magnitude one.
  void normalize() {
    using std::log;
    const Scalar peak = m.cwiseAbs().maxCoeff();
    if (peak > Scalar(0)) {
      m /= peak;
      logscale += log(peak);
    }
  }

  /// exp(logscale) * m; overflows for very stiff propagators.
  Matrix2 value() const {
    using std::exp;
    return m * exp(logscale);
  }

  /// Determinant of the represented matrix, det(m) * exp(2 logscale).
  Scalar determinant() const {
    using std::exp;
    return m.determinant() * exp(Scalar(2) * logscale);
  }

  /// Inverse of a unimodular matrix: (e^s m)^-1 = adj(e^s m) = e^s adj(m).
  ScaledMatrix inverse() const {
    ScaledMatrix r;
    r.m << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    r.logscale = logscale;
    return r;
  }

  friend ScaledMatrix operator*(const ScaledMatrix& a, const ScaledMatrix& b) {
    ScaledMatrix r;
    r.m = a.m * b.m;
    r.logscale = a.logscale + b.logscale;
    r.normalize();
    return r;
  }
};

template <typename Scalar>
struct State {
  using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

  Vector2 y = Vector2(Scalar(1), Scalar(0));
  Scalar logscale = Scalar(0);

  State() = default;
  State(Scalar u, Scalar du, Scalar log_scale = Scalar(0)) : y(u, du), logscale(log_scale) {}

  Scalar u() const { return y[0]; }
  Scalar du() const { return y[1]; }

  void normalize() {
    using std::log;
    const Scalar n = y.norm();
    if (n > Scalar(0)) {
      y /= n;
      logscale += log(n);
    }
  }

  State normalized() const {
    State s = *this;
    s.normalize();
    return s;
  }
};

template <typename Scalar>
State<Scalar> operator*(const ScaledMatrix<Scalar>& a, const State<Scalar>& s) {
  State<Scalar> r;
  r.y = a.m * s.y;
  r.logscale = a.logscale + s.logscale;
  r.normalize();
  return r;
}

/// The pair (C, S) with C'' = m C, S'' = m S, C(0) = 1, C'(0) = 0,
/// S(0) = 0, S'(0) = 1, evaluated at s in true scale. The propagator over
/// length s is [[C, S], [m S, C]].
template <typename Scalar>
struct Fundamental {
  Scalar c;
  Scalar s;
};

template <typename Scalar>
Fundamental<Scalar> fundamental(Scalar m, Scalar len) {
  using std::abs;
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  using std::sqrt;
  const Scalar z = m * len * len;
  if (abs(z) < Scalar(1e-8)) {
    return {Scalar(1) + z / Scalar(2) + z * z / Scalar(24),
            len * (Scalar(1) + z / Scalar(6) + z * z / Scalar(120))};
  }
  if (m > Scalar(0)) {
    const Scalar mu = sqrt(m);
    return {cosh(mu * len), sinh(mu * len) / mu};
  }
  const Scalar k = sqrt(-m);
  return {cos(k * len), sin(k * len) / k};
}

/// Transfer matrix of u'' = q_minus_lambda * u over a piece of given
/// length, mapping (u, u') at the piece start to the piece end.
template <typename Scalar>
ScaledMatrix<Scalar> piece_propagator(Scalar q_minus_lambda, Scalar length) {
  using std::abs;
  using std::exp;
  using std::expm1;
  using std::sqrt;
  if (length < Scalar(0)) throw DomainError("piece_propagator", "length must be non-negative");
  ScaledMatrix<Scalar> r;
  const Scalar m = q_minus_lambda;
  const Scalar z = m * length * length;
  if (abs(z) < Scalar(1e-8) || m < Scalar(0)) {
    const auto f = fundamental(m, length);
    r.m << f.c, f.s, m * f.s, f.c;
  } else {
    // cosh(x) = e^x (1 + e^{-2x}) / 2, sinh(x) = e^x (1 - e^{-2x}) / 2
    const Scalar mu = sqrt(m);
    const Scalar x = mu * length;
    const Scalar e = exp(Scalar(-2) * x);
    const Scalar one_minus = -expm1(Scalar(-2) * x);
    const Scalar ch = (Scalar(1) + e) / Scalar(2);
    const Scalar sh = one_minus / Scalar(2);
    r.m << ch, sh / mu, mu * sh, ch;
    r.logscale = x;
  }
  r.normalize();
  return r;
}

/// Zeros of u(s) = u0 C(s) + du0 S(s) on a piece of length L.
struct PieceZeros {
  int count = 0;
  bool at_end = false;  ///< a counted zero lies within the tolerance of s = L
};

/// Location tolerance for zeros landing on breakpoints.
inline constexpr double kZeroTolerance = 1e-12;

/// Counts zeros of u on (lower, L], where lower is 0, or the location
/// tolerance when the previous piece already counted a zero at its end.
/// A zero within the tolerance past L is counted here and flagged, so the
/// next piece skips it.
template <typename Scalar>
PieceZeros piece_zeros(Scalar m, Scalar length, Scalar u0, Scalar du0, bool skip_start) {
  using std::abs;
  using std::atan2;
  using std::atanh;
  using std::floor;
  using std::sqrt;
  const Scalar tol = Scalar(kZeroTolerance);
  const Scalar lower = skip_start ? tol : Scalar(0);
  PieceZeros out;
  if (u0 == Scalar(0) && du0 == Scalar(0)) return out;

  const Scalar z = m * length * length;
  auto accept = [&](Scalar s) {
    if (s > lower && s <= length + tol) {
      ++out.count;
      if (s >= length - tol) out.at_end = true;
    }
  };

  if (abs(z) < Scalar(1e-8)) {
    // At most one zero; start from the linear root and polish with Newton.
    if (du0 == Scalar(0)) return out;
    Scalar s = -u0 / du0;
    if (s < -tol || s > Scalar(2) * length + tol) return out;
    for (int it = 0; it < 3; ++it) {
      const auto f = fundamental(m, s);
      const Scalar val = u0 * f.c + du0 * f.s;
      const Scalar der = u0 * m * f.s + du0 * f.c;
      if (der == Scalar(0)) break;
      s -= val / der;
    }
    accept(s);
    return out;
  }

  if (m > Scalar(0)) {
    if (du0 == Scalar(0)) return out;
    const Scalar mu = sqrt(m);
    const Scalar r = -mu * u0 / du0;
    if (!(r > Scalar(0) && r < Scalar(1))) return out;
    accept(atanh(r) / mu);
    return out;
  }

  // Oscillatory: k u = R sin(theta), u' = R cos(theta), theta advances by k s.
  const Scalar k = sqrt(-m);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar theta0 = atan2(k * u0, du0);
  const Scalar n_hi = floor((theta0 + k * (length + tol)) / pi);
  const Scalar n_lo = floor((theta0 + k * lower) / pi);
  out.count = static_cast<int>(n_hi - n_lo);
  if (out.count > 0) {
    const Scalar s_last = (n_hi * pi - theta0) / k;
    if (s_last >= length - tol) out.at_end = true;
  }
  return out;
}

namespace detail {

// Calls f(q_value, a, b) for each constant segment of p on [from, to],
// including the zero regions outside the support.
template <typename Scalar, typename F>
void for_each_segment(const BasicPotential<Scalar>& p, Scalar from, Scalar to, F&& f) {
  Scalar x = from;
  if (x < p.left()) {
    const Scalar end = std::min(to, p.left());
    if (end > x) f(Scalar(0), x, end);
    x = end;
  }
  for (Eigen::Index i = 0; i < p.pieces() && x < to; ++i) {
    const Scalar end = std::min(to, p.piece_right(i));
    if (end > x) {
      f(p.values()[i], x, end);
      x = end;
    }
  }
  if (x < to) f(Scalar(0), x, to);
}

}  // namespace detail

/// Propagates init from `from` to `to` through p at energy lambda.
template <typename Scalar>
State<Scalar> propagate(const BasicPotential<Scalar>& p, Scalar lambda, Scalar from, Scalar to,
                        State<Scalar> init) {
  if (from > to) throw DomainError("propagate", "from must not exceed to");
  State<Scalar> s = init;
  detail::for_each_segment(p, from, to, [&](Scalar q, Scalar a, Scalar b) {
    s = piece_propagator(q - lambda, b - a) * s;
  });
  return s;
}

template <typename Scalar>
struct NodeResult {
  State<Scalar> state;
  int nodes = 0;
};

/// Propagates init across the support [x_0, x_m] and counts the zeros of
/// u on (x_0, x_m].
template <typename Scalar>
NodeResult<Scalar> propagate_nodes(const BasicPotential<Scalar>& p, Scalar lambda,
                                   State<Scalar> init) {
  if (init.u() == Scalar(0) && init.du() == Scalar(0)) {
    throw DomainError("propagate_nodes", "initial state must be non-zero");
  }
  NodeResult<Scalar> r{init.normalized(), 0};
  bool skip = false;
  for (Eigen::Index i = 0; i < p.pieces(); ++i) {
    const Scalar m = p.values()[i] - lambda;
    const Scalar len = p.piece_length(i);
    const auto z = piece_zeros(m, len, r.state.u(), r.state.du(), skip);
    r.nodes += z.count;
    skip = z.at_end;
    r.state = piece_propagator(m, len) * r.state;
  }
  return r;
}

}  // namespace s1d

#endif  // S1D_PROPAGATOR_HPP
