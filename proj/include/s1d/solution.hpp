#ifndef S1D_SOLUTION_HPP
#define S1D_SOLUTION_HPP

#include <vector>

#include <Eigen/Core>

#include "s1d/potential.hpp"

namespace s1d {

/// A solution of -v'' + q v = lambda v on the whole line, stored in closed
/// form: on each piece [x_i, x_{i+1}] it is determined by m_i = q_i - lambda
/// and its right-limit data (v, v') at x_i. Data of neighbouring pieces need
/// not match, which is how interface jumps are carried. Outside [x_0, x_m]
/// the solution is a tail a * exp(-rate * distance) with rate >= 0.
class PiecewiseSolution {
 public:
  PiecewiseSolution() = default;
  PiecewiseSolution(std::vector<double> grid, std::vector<double> m,
                    std::vector<Eigen::Vector2d> start, double left_rate, double left_amplitude,
                    double right_rate, double right_amplitude);

  double left() const { return grid_.front(); }
  double right() const { return grid_.back(); }
  std::size_t pieces() const { return m_.size(); }
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& piece_m() const { return m_; }
  const std::vector<Eigen::Vector2d>& piece_start() const { return start_; }

  double left_rate() const { return left_rate_; }
  double right_rate() const { return right_rate_; }
  /// Value at x_0 seen from the left tail.
  double left_amplitude() const { return left_amp_; }
  /// Value at x_m seen from the right tail.
  double right_amplitude() const { return right_amp_; }

  /// (v, v') at x. At a breakpoint the piece to the right is used.
  Eigen::Vector2d at(double x) const;
  /// (v, v') at x as a limit from the left.
  Eigen::Vector2d at_left(double x) const;

  double value(double x) const { return at(x)[0]; }
  double derivative(double x) const { return at(x)[1]; }

  /// Integral of v^2 over [a, b]; a may be -inf and b may be +inf.
  double integral_of_square(double a, double b) const;
  /// Integral of w v^2 over the real line for a piecewise-constant weight.
  double weighted_square_integral(const Potential& w) const;
  /// Full-line L2 norm squared (infinite for non-decaying tails).
  double norm_squared() const;

  /// Zeros of v in (x_0, x_m); tails are zero-free by construction.
  int count_zeros() const;

  PiecewiseSolution scaled(double c) const;

 private:
  std::size_t piece_index(double x) const;
  std::size_t piece_index_left(double x) const;
  Eigen::Vector2d eval_piece(std::size_t i, double x) const;
  double piece_square_integral(std::size_t i, double a, double b) const;
  double tail_square_integral(double rate, double amp, double d0, double d1) const;

  std::vector<double> grid_;
  std::vector<double> m_;
  std::vector<Eigen::Vector2d> start_;
  double left_rate_ = 0.0;
  double left_amp_ = 0.0;
  double right_rate_ = 0.0;
  double right_amp_ = 0.0;
};

/// Integral of u(s)^2 over [0, len] for u'' = m u with u(0) = u0,
/// u'(0) = du0, in closed form (series near m len^2 = 0).
double square_integral(double m, double len, double u0, double du0);

}  // namespace s1d

#endif  // S1D_SOLUTION_HPP
