#include "s1d/line_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "s1d/error.hpp"

namespace s1d {

namespace {

constexpr int kMaxIterations = 200;

ScaledMatrix<double> as_scaled(const Eigen::Matrix2d& j) {
  ScaledMatrix<double> r;
  r.m = j;
  r.normalize();
  return r;
}

}  // namespace

LineOperator::LineOperator(const Potential& q) {
  grid_.assign(q.breakpoints().data(), q.breakpoints().data() + q.breakpoints().size());
  values_.assign(q.values().data(), q.values().data() + q.values().size());
}

LineOperator::LineOperator(const Potential& q, const Interface& iface) : LineOperator(q) {
  const auto& j = iface.jump;
  if (!std::isfinite(iface.position) || !j.allFinite()) {
    throw DomainError("interface", "position and jump must be finite");
  }
  if (j(0, 1) != 0.0 || j(0, 0) == 0.0 || std::abs(j.determinant() - 1.0) > 1e-12) {
    throw DomainError("interface", "jump must be [[a, 0], [c, 1/a]] with a != 0");
  }
  const double p = iface.position;
  std::vector<double> pts = grid_;
  pts.push_back(p);
  // Keep the interface strictly inside the grid.
  if (p <= grid_.front()) pts.push_back(p - 1.0);
  if (p >= grid_.back()) pts.push_back(p + 1.0);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<double> vals;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) vals.push_back(q(0.5 * (pts[i] + pts[i + 1])));
  grid_ = std::move(pts);
  values_ = std::move(vals);
  jump_index_ = static_cast<std::size_t>(std::find(grid_.begin(), grid_.end(), p) - grid_.begin());
  jump_ = j;
}

double LineOperator::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

LineOperator LineOperator::refined(double lambda, double max_phase) const {
  LineOperator r;
  r.jump_ = jump_;
  r.grid_.push_back(grid_.front());
  for (std::size_t i = 0; i < pieces(); ++i) {
    const double a = grid_[i];
    const double b = grid_[i + 1];
    if (jump_index_ && *jump_index_ == i) r.jump_index_ = r.grid_.size() - 1;
    const double phase = std::sqrt(std::abs(values_[i] - lambda)) * (b - a);
    const int n = std::clamp(static_cast<int>(std::ceil(phase / max_phase)), 1, 1000);
    for (int k = 1; k <= n; ++k) {
      r.grid_.push_back(k == n ? b : a + (b - a) * k / n);
      r.values_.push_back(values_[i]);
    }
  }
  return r;
}

Shot shoot(const LineOperator& op, double lambda, State<double> init) {
  if (init.u() == 0.0 && init.du() == 0.0) {
    throw DomainError("shoot", "initial state must be non-zero");
  }
  Shot r{init.normalized(), 0, false};
  const auto& g = op.grid();
  const auto& q = op.values();
  for (std::size_t i = 0; i < op.pieces(); ++i) {
    if (op.has_jump() && op.jump_index() == i) r.state = as_scaled(op.jump()) * r.state;
    const double m = q[i] - lambda;
    const double len = g[i + 1] - g[i];
    const auto z = piece_zeros(m, len, r.state.u(), r.state.du(), r.zero_at_end);
    r.nodes += z.count;
    r.zero_at_end = z.at_end;
    r.state = piece_propagator(m, len) * r.state;
  }
  return r;
}

double mismatch(const LineOperator& op, double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw DomainError("mismatch", "omega must be finite and non-negative");
  }
  const auto s = shoot(op, -omega * omega, State<double>(1.0, omega)).state;
  return s.du() + omega * s.u();
}

int count_below(const LineOperator& op, double lambda) {
  if (!(lambda <= 0.0)) throw DomainError("count_negative", "lambda must be <= 0");
  const double omega = std::sqrt(-lambda);
  const auto shot = shoot(op, lambda, State<double>(1.0, omega));
  const double u = shot.state.u();
  const double du = shot.state.du();
  const double lower = shot.zero_at_end ? kZeroTolerance : 0.0;
  int n = shot.nodes;
  // Zero of the exterior continuation on the right.
  if (omega == 0.0) {
    if (std::abs(du) > kResonanceTolerance && u * du < 0.0 && -u / du > lower) ++n;
  } else if (u * du < 0.0 && omega * std::abs(u) < std::abs(du)) {
    if (std::atanh(-omega * u / du) / omega > lower) ++n;
  }
  return n;
}

std::vector<SpectralResult> bound_states(const LineOperator& op, double tol) {
  if (!(tol > 0.0)) throw DomainError("negative_eigenvalues", "tol must be positive");
  const int n = count_below(op, 0.0);
  std::vector<SpectralResult> out;
  if (n == 0) return out;

  auto count = [&](double w) { return w == 0.0 ? n : count_below(op, -w * w); };

  // Above omega_hi there is nothing; min-max gives sqrt(-min q) without a jump.
  double hi = std::sqrt(std::max(0.0, -op.min_value())) * (1.0 + 1e-12);
  if (hi == 0.0) hi = 1.0;
  for (int it = 0; count(hi) > 0; ++it) {
    if (it > kMaxIterations) throw ConvergenceError("negative_eigenvalues", "no upper bound");
    hi = 2.0 * hi + 1.0;
  }

  for (int j = 0; j < n; ++j) {
    double a = 0.0, b = hi;
    int na = n, nb = 0;
    // Isolate the (j+1)-th largest omega: N(a) = j + 1, N(b) = j.
    for (int it = 0; !(na == j + 1 && nb == j); ++it) {
      if (it > kMaxIterations || b - a <= tol) break;
      const double mid = 0.5 * (a + b);
      const int nm = count(mid);
      if (nm >= j + 1) {
        a = mid;
        na = nm;
      } else {
        b = mid;
        nb = nm;
      }
    }
    const bool isolated = na == j + 1 && nb == j;
    double da = isolated && a > 0.0 ? mismatch(op, a) : 0.0;
    const double db = isolated ? mismatch(op, b) : 0.0;
    const bool use_sign = isolated && a > 0.0 && da != 0.0 && db != 0.0 && (da < 0) != (db < 0);
    int it = 0;
    while (b - a > tol) {
      if (++it > kMaxIterations) {
        throw ConvergenceError("negative_eigenvalues", "bisection did not converge");
      }
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (use_sign) {
        const double dm = mismatch(op, mid);
        if (dm == 0.0) {
          a = b = mid;
          break;
        }
        if ((dm < 0) == (da < 0)) {
          a = mid;
          da = dm;
        } else {
          b = mid;
        }
      } else if (count(mid) >= j + 1) {
        a = mid;
      } else {
        b = mid;
      }
    }
    const double w = 0.5 * (a + b);
    out.push_back({w, j, std::abs(mismatch(op, w))});
  }
  return out;
}

BoundStateFunction bound_state_function(const LineOperator& base, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("eigenfunction", "omega must be positive");
  }
  const double lambda = -omega * omega;
  const LineOperator op = base.refined(lambda, 2.0);
  const auto& g = op.grid();
  const std::size_t np = op.pieces();
  std::vector<double> m(np);
  std::vector<ScaledMatrix<double>> prop(np);
  for (std::size_t i = 0; i < np; ++i) {
    m[i] = op.values()[i] - lambda;
    prop[i] = piece_propagator(m[i], g[i + 1] - g[i]);
  }
  const auto jump = as_scaled(op.jump());
  const auto jump_inv = jump.inverse();

  // Right-limit states at each piece start from both ends.
  std::vector<State<double>> from_left(np), from_right(np);
  const State<double> left_init = State<double>(1.0, omega).normalized();
  State<double> s = left_init;
  for (std::size_t i = 0; i < np; ++i) {
    if (op.has_jump() && op.jump_index() == i) s = jump * s;
    from_left[i] = s;
    s = prop[i] * s;
  }
  const State<double> right_init = State<double>(1.0, -omega).normalized();
  s = right_init;
  for (std::size_t i = np; i-- > 0;) {
    s = prop[i].inverse() * s;
    from_right[i] = s;
    if (op.has_jump() && op.jump_index() == i) s = jump_inv * s;
  }

  // Match where |uL uR|, i.e. v^2, is largest in true scale.
  std::size_t k = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < np; ++i) {
    const double c = std::log(std::abs(from_left[i].u())) + from_left[i].logscale +
                     std::log(std::abs(from_right[i].u())) + from_right[i].logscale;
    if (c > best) {
      best = c;
      k = i;
    }
  }
  const auto& L = from_left[k];
  const auto& R = from_right[k];
  const double residual = std::abs(L.u() * R.du() - L.du() * R.u());
  // Scale the right solution by c so the values agree at x_k.
  const double log_c = std::log(std::abs(L.u())) + L.logscale - std::log(std::abs(R.u())) -
                       R.logscale;
  const double sign_c = (L.u() < 0) == (R.u() < 0) ? 1.0 : -1.0;

  std::vector<double> logs(np);
  std::vector<Eigen::Vector2d> ys(np);
  for (std::size_t i = 0; i < np; ++i) {
    if (i < k) {
      ys[i] = from_left[i].y;
      logs[i] = from_left[i].logscale;
    } else {
      ys[i] = sign_c * from_right[i].y;
      logs[i] = from_right[i].logscale + log_c;
    }
  }
  const double left_log = left_init.logscale;
  const double right_log = right_init.logscale + log_c;
  double ref = std::max(left_log, right_log);
  for (double l : logs) ref = std::max(ref, l);

  std::vector<Eigen::Vector2d> start(np);
  for (std::size_t i = 0; i < np; ++i) start[i] = ys[i] * std::exp(logs[i] - ref);
  const double amp_left = left_init.u() * std::exp(left_log - ref);
  const double amp_right = sign_c * right_init.u() * std::exp(right_log - ref);

  PiecewiseSolution v(g, m, std::move(start), omega, amp_left, omega, amp_right);
  const double nrm = std::sqrt(v.norm_squared());
  if (!(nrm > 0.0) || !std::isfinite(nrm)) {
    throw ConvergenceError("eigenfunction", "could not normalize the matched solution");
  }
  return {v.scaled(1.0 / nrm), residual};
}

PiecewiseSolution zero_energy_solution(const LineOperator& op) {
  const auto& g = op.grid();
  const std::size_t np = op.pieces();
  std::vector<double> m(op.values());
  std::vector<Eigen::Vector2d> start(np);
  Eigen::Vector2d y(1.0, 0.0);
  for (std::size_t i = 0; i < np; ++i) {
    if (op.has_jump() && op.jump_index() == i) y = op.jump() * y;
    start[i] = y;
    const auto f = fundamental(m[i], g[i + 1] - g[i]);
    y = Eigen::Vector2d(y[0] * f.c + y[1] * f.s, y[0] * m[i] * f.s + y[1] * f.c);
    if (!y.allFinite()) throw ConvergenceError("zero_energy_solution", "overflow");
  }
  return PiecewiseSolution(g, std::move(m), std::move(start), 0.0, 1.0, 0.0, y[0]);
}

}  // namespace s1d
