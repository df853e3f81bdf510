#include "s1d/solution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "s1d/error.hpp"
#include "s1d/propagator.hpp"

namespace s1d {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Coefficients of  (1/len) * integral_0^len u^2 = u0^2 C1 + u0 du0 len C2 + du0^2 len^2 C3
// as functions of z = m len^2.
struct SquareCoefficients {
  double c1, c2, c3;
};

SquareCoefficients square_coefficients(double z) {
  if (std::abs(z) < 0.5) {
    // C2 = sum_{n>=1} 4^n z^{n-1} / (2 (2n)!), C3 = sum_{n>=1} 4^n z^{n-1} / (2 (2n+1)!)
    double p = 2.0, r = 4.0 / 6.0;
    double c2 = p / 2.0, c3 = r / 2.0;
    for (int n = 2; n < 40; ++n) {
      p *= 4.0 * z / ((2.0 * n - 1.0) * (2.0 * n));
      r *= 4.0 * z / ((2.0 * n) * (2.0 * n + 1.0));
      c2 += p / 2.0;
      c3 += r / 2.0;
      if (std::abs(p) < 1e-18 * std::abs(c2) && std::abs(r) < 1e-18 * std::abs(c3)) break;
    }
    return {1.0 + z * c3, c2, c3};
  }
  if (z > 0.0) {
    const double x = std::sqrt(z);
    const double sh2 = std::sinh(2.0 * x);
    const double shx = std::sinh(x) / x;
    return {0.5 + sh2 / (4.0 * x), shx * shx, (sh2 - 2.0 * x) / (4.0 * x * x * x)};
  }
  const double y = std::sqrt(-z);
  const double s2 = std::sin(2.0 * y);
  const double sy = std::sin(y) / y;
  return {0.5 + s2 / (4.0 * y), sy * sy, (2.0 * y - s2) / (4.0 * y * y * y)};
}

}  // namespace

double square_integral(double m, double len, double u0, double du0) {
  if (len <= 0.0) return 0.0;
  const auto c = square_coefficients(m * len * len);
  return len * (u0 * u0 * c.c1 + u0 * du0 * len * c.c2 + du0 * du0 * len * len * c.c3);
}

PiecewiseSolution::PiecewiseSolution(std::vector<double> grid, std::vector<double> m,
                                     std::vector<Eigen::Vector2d> start, double left_rate,
                                     double left_amplitude, double right_rate,
                                     double right_amplitude)
    : grid_(std::move(grid)),
      m_(std::move(m)),
      start_(std::move(start)),
      left_rate_(left_rate),
      left_amp_(left_amplitude),
      right_rate_(right_rate),
      right_amp_(right_amplitude) {
  if (grid_.size() < 2 || m_.size() + 1 != grid_.size() || start_.size() != m_.size()) {
    throw DomainError("PiecewiseSolution", "inconsistent piece data");
  }
  if (left_rate_ < 0.0 || right_rate_ < 0.0) {
    throw DomainError("PiecewiseSolution", "tail rates must be non-negative");
  }
}

std::size_t PiecewiseSolution::piece_index(double x) const {
  auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
  return static_cast<std::size_t>(it - grid_.begin()) - 1;
}

std::size_t PiecewiseSolution::piece_index_left(double x) const {
  auto it = std::lower_bound(grid_.begin(), grid_.end(), x);
  return static_cast<std::size_t>(it - grid_.begin()) - 1;
}

Eigen::Vector2d PiecewiseSolution::eval_piece(std::size_t i, double x) const {
  const auto f = fundamental(m_[i], x - grid_[i]);
  const auto& y = start_[i];
  return {y[0] * f.c + y[1] * f.s, y[0] * m_[i] * f.s + y[1] * f.c};
}

Eigen::Vector2d PiecewiseSolution::at(double x) const {
  if (x < left()) {
    const double v = left_amp_ * std::exp(-left_rate_ * (left() - x));
    return {v, left_rate_ * v};
  }
  if (x >= right()) {
    const double v = right_amp_ * std::exp(-right_rate_ * (x - right()));
    return {v, -right_rate_ * v};
  }
  return eval_piece(piece_index(x), x);
}

Eigen::Vector2d PiecewiseSolution::at_left(double x) const {
  if (x <= left()) {
    const double v = left_amp_ * std::exp(-left_rate_ * (left() - x));
    return {v, left_rate_ * v};
  }
  if (x > right()) return at(x);
  return eval_piece(piece_index_left(x), x);
}

double PiecewiseSolution::tail_square_integral(double rate, double amp, double d0,
                                               double d1) const {
  if (d1 <= d0 || amp == 0.0) return 0.0;
  const double a2 = amp * amp;
  if (rate == 0.0) return std::isinf(d1) ? kInf : a2 * (d1 - d0);
  const double e1 = std::isinf(d1) ? 0.0 : std::exp(-2.0 * rate * d1);
  return a2 * (std::exp(-2.0 * rate * d0) - e1) / (2.0 * rate);
}

double PiecewiseSolution::piece_square_integral(std::size_t i, double a, double b) const {
  const double lo = std::max(a, grid_[i]);
  const double hi = std::min(b, grid_[i + 1]);
  if (hi <= lo) return 0.0;
  const auto y = eval_piece(i, lo);
  return square_integral(m_[i], hi - lo, y[0], y[1]);
}

double PiecewiseSolution::integral_of_square(double a, double b) const {
  if (!(b > a)) return 0.0;
  double total = 0.0;
  if (a < left()) {
    total += tail_square_integral(left_rate_, left_amp_, left() - std::min(b, left()), left() - a);
  }
  for (std::size_t i = 0; i < pieces(); ++i) total += piece_square_integral(i, a, b);
  if (b > right()) {
    total += tail_square_integral(right_rate_, right_amp_, std::max(a, right()) - right(),
                                  b - right());
  }
  return total;
}

double PiecewiseSolution::weighted_square_integral(const Potential& w) const {
  double total = 0.0;
  for (Eigen::Index i = 0; i < w.pieces(); ++i) {
    const double v = w.values()[i];
    if (v != 0.0) total += v * integral_of_square(w.piece_left(i), w.piece_right(i));
  }
  return total;
}

double PiecewiseSolution::norm_squared() const { return integral_of_square(-kInf, kInf); }

int PiecewiseSolution::count_zeros() const {
  int zeros = 0;
  bool skip = false;
  for (std::size_t i = 0; i < pieces(); ++i) {
    const double len = grid_[i + 1] - grid_[i];
    const bool last = i + 1 == pieces();
    const auto z = piece_zeros(m_[i], last ? len - kZeroTolerance : len, start_[i][0],
                               start_[i][1], skip);
    zeros += z.count;
    skip = z.at_end;
  }
  return zeros;
}

PiecewiseSolution PiecewiseSolution::scaled(double c) const {
  PiecewiseSolution r = *this;
  for (auto& y : r.start_) y *= c;
  r.left_amp_ *= c;
  r.right_amp_ *= c;
  return r;
}

}  // namespace s1d
