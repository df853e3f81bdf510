#ifndef S1D_LINE_OPERATOR_HPP
#define S1D_LINE_OPERATOR_HPP

// -d^2/dx^2 + q on the real line with piecewise-constant, compactly
// supported q and an optional point interface
//     (y(p+0), y'(p+0)) = J (y(p-0), y'(p-0)),   J = [[a, 0], [c, 1/a]].
//
// Bound states are located by shooting: the left solution exp(omega x) is
// carried across the support with exact propagators, the zeros of the
// mismatch u'(b) + omega u(b) are the decay rates omega of the bound states,
// and the number of zeros of the left solution at energy lambda counts the
// eigenvalues below lambda.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "s1d/potential.hpp"
#include "s1d/propagator.hpp"
#include "s1d/solution.hpp"

namespace s1d {

/// |mismatch(q, 0)| at or below this declares q resonant.
inline constexpr double kResonanceTolerance = 1e-9;

struct Interface {
  double position = 0.0;
  Eigen::Matrix2d jump = Eigen::Matrix2d::Identity();
};

/// One negative eigenvalue lambda = -omega^2.
struct SpectralResult {
  double omega = 0.0;
  int node_index = 0;
  double mismatch_residual = 0.0;

  double lambda() const { return -omega * omega; }
};

class LineOperator {
 public:
  explicit LineOperator(const Potential& q);
  LineOperator(const Potential& q, const Interface& iface);

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t pieces() const { return values_.size(); }
  double left() const { return grid_.front(); }
  double right() const { return grid_.back(); }
  double min_value() const;

  bool has_jump() const { return jump_index_.has_value(); }
  /// The jump acts at grid()[jump_index()], before that piece.
  std::size_t jump_index() const { return *jump_index_; }
  const Eigen::Matrix2d& jump() const { return jump_; }

  /// Same operator on a grid where every piece has sqrt|q - lambda| * length
  /// at most max_phase.
  LineOperator refined(double lambda, double max_phase) const;

 private:
  LineOperator() = default;

  std::vector<double> grid_;
  std::vector<double> values_;
  std::optional<std::size_t> jump_index_;
  Eigen::Matrix2d jump_ = Eigen::Matrix2d::Identity();
};

struct Shot {
  State<double> state;  ///< at the right edge, normalized
  int nodes = 0;        ///< zeros of u on (left, right]
  bool zero_at_end = false;
};

/// Carries init from the left edge to the right edge at energy lambda.
Shot shoot(const LineOperator& op, double lambda, State<double> init);

/// (u'(b) + omega u(b)) / |(u(b), u'(b))| for the left solution exp(omega x).
double mismatch(const LineOperator& op, double omega);

/// Number of eigenvalues strictly below lambda (lambda <= 0). At lambda = 0
/// a zero-energy resonance is not counted.
int count_below(const LineOperator& op, double lambda);

/// All negative eigenvalues, ordered by node index (omega decreasing).
std::vector<SpectralResult> bound_states(const LineOperator& op, double tol);

struct BoundStateFunction {
  PiecewiseSolution solution;  ///< L2-normalized, positive on the left tail
  double matching_residual = 0.0;
};

/// Eigenfunction for decay rate omega, built by matching the left- and
/// right-decaying solutions where both are well conditioned.
BoundStateFunction bound_state_function(const LineOperator& op, double omega);

/// The left solution with (v, v') = (1, 0) at the left edge, at energy 0.
PiecewiseSolution zero_energy_solution(const LineOperator& op);

}  // namespace s1d

#endif  // S1D_LINE_OPERATOR_HPP
